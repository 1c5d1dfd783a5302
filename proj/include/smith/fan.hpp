#pragma once
// Conic constructible functions on Q^n (n <= 3) presented by complete fans,
// the Euler-characteristic Fourier transform on them, and the mod-p Smith
// restriction to the fixed subspace of a coordinate permutation.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "smith/scalar.hpp"

namespace smith {

using Vec = std::vector<i64>;

// Integer covector with a positive denominator; evaluation signs are all the
// transform needs, so the denominator only matters for exact reporting.
struct Covector {
  Vec num;
  i64 den = 1;

  i64 dim() const { return static_cast<i64>(num.size()); }
};

i64 dot(const Vec& a, const Vec& b);
Vec primitive(Vec v);  // divide by gcd, error on zero vector

// A closed rational polyhedral cone, generated by integer rays.
// The empty ray list is the origin cone.
struct Cone {
  std::vector<Vec> rays;  // kept sorted for canonical identity

  int dim(int ambient) const;  // rank of the ray matrix (0 for origin)
  std::string key() const;     // canonical serialization key
};

class Fan {
public:
  Fan(int ambient_dim, std::vector<Cone> cones);

  // Cells of the central hyperplane arrangement of the given covectors.
  // The covectors must span the dual space (essential arrangement); the
  // resulting cones partition Q^n into relative interiors by construction.
  static Fan from_arrangement(int ambient_dim, const std::vector<Vec>& covectors);

  // The arrangement refined by additional hyperplanes; used to adapt a fan
  // to a fixed subspace.
  Fan refined_by(const std::vector<Vec>& covectors) const;

  int ambient_dim() const { return dim_; }
  int size() const { return static_cast<int>(cones_.size()); }
  const Cone& cone(int id) const { return cones_[id]; }
  const std::vector<Cone>& cones() const { return cones_; }
  int find(const Cone& c) const;

  // Covectors whose hyperplanes carve this fan (present for arrangement-built
  // fans; empty otherwise).
  const std::vector<Vec>& walls() const { return walls_; }

  // Exact sanity checks: integer rays, the origin cone, and the Euler
  // completeness relation Σ_C (−1)^{dim C} = (−1)^n.
  void validate() const;

private:
  int dim_;
  std::vector<Cone> cones_;
  std::vector<Vec> walls_;
};

using FanPtr = std::shared_ptr<const Fan>;

inline FanPtr share(Fan f) { return std::make_shared<const Fan>(std::move(f)); }

struct ConicCFun {
  FanPtr fan;
  Ring ring;
  std::vector<i64> values;  // per cone id, value on the relative interior

  static ConicCFun constant(FanPtr fan, Ring ring, i64 value);
  static ConicCFun origin_indicator(FanPtr fan, Ring ring, i64 value = 1);
};

enum class HalfspaceMode { LtOne, LtZero, EqZero, EqOne };

// χ_c of relint(C) ∩ {ξ < 1} (or the other regions), exactly.
Scalar halfspace_chi(const Cone& c, int ambient_dim, const Covector& xi, HalfspaceMode mode,
                     Ring ring = Ring::integers());

// Σ_C f(C) · χ_c(relint C ∩ {ξ < 1}).
Scalar ft_value(const ConicCFun& f, const Covector& xi);

// The transform realized on a user-supplied complete dual fan: every cone is
// sampled at an interior point and at ray perturbations; disagreeing samples
// raise a refinement-needed error naming the cone.
ConicCFun fourier_transform(const ConicCFun& f, FanPtr dual_fan);

// A coordinate permutation of order p acting on Q^n.
struct PermutationAction {
  std::vector<int> perm;  // images of coordinates
  i64 order() const;

  Vec apply(const Vec& v) const;
  // Integer basis of the fixed subspace: one 0/1 cycle indicator per cycle,
  // ordered by smallest cycle member.
  std::vector<Vec> fixed_basis() const;
};

// Restriction of an invariant conic function to the fixed subspace, as a
// conic function on the induced fan (cones of `fan` lying inside V^ϖ,
// rewritten in the cycle basis).  The fan must be adapted: its cones inside
// V^ϖ must form a complete fan of the subspace.
struct ConicSmith {
  FanPtr fixed_fan;  // fan of V^ϖ in cycle-basis coordinates
  ConicCFun value;
};
ConicSmith smith_conic(const ConicCFun& f, const PermutationAction& act);

// The averaging lift of a covector on V^ϖ (cycle-basis coordinates) to a
// ϖ-invariant covector on V: ξ̃(v) = (1/p)·ξ(Σ_g g·v), over Q.
Covector average_lift(const Covector& xi_fixed, const PermutationAction& act);

bool is_invariant(const ConicCFun& f, const PermutationAction& act);

}  // namespace smith
