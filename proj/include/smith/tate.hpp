#pragma once
// Bounded complexes of F_p[Z/p]-modules presented by generator-action
// matrices, their Tate cohomology over a stable window, the computational
// perfection criterion, tensor and duality, the periodicity witnesses, and
// the equivariant cochain bridge from simplicial actions.

#include <map>

#include "smith/complex.hpp"
#include "smith/scalar.hpp"

namespace smith {

using PMat = std::vector<std::vector<i64>>;  // matrix over F_p

struct Degree {
  i64 dim = 0;
  PMat action;  // generator action, order p
};

class TateComplex {
public:
  // degrees: per-degree module data; differentials: d[k]: M^k -> M^{k+1}.
  TateComplex(i64 p, std::map<int, Degree> degrees, std::map<int, PMat> differentials);

  i64 p() const { return p_; }
  const std::map<int, Degree>& degrees() const { return degrees_; }
  i64 dim(int k) const {
    auto it = degrees_.find(k);
    return it == degrees_.end() ? 0 : it->second.dim;
  }
  const PMat& action(int k) const;
  // zero matrix of the right shape when absent
  PMat differential(int k) const;

  int min_degree() const;
  int max_degree() const;

  TateComplex shifted(int s) const;  // M[s], differential negated for odd s

private:
  i64 p_ = 2;
  std::map<int, Degree> degrees_;
  std::map<int, PMat> differentials_;
};

// Σ (−1)^i dim M^i mod p.
i64 chi_mod_p(const TateComplex& m);

// Tate hypercohomology dimensions over the stable window
// [min_degree − 2, max_degree + 2]; 2-periodic there.
std::map<int, i64> tate_cohomology(const TateComplex& m);

// Tate-acyclicity over the stable window: the computational criterion for
// membership in the perfect subcategory.
bool is_perfect(const TateComplex& m);

// Ordinary cohomology dimensions (for quasi-isomorphism checks).
std::map<int, i64> cohomology(const TateComplex& m);
bool is_acyclic(const TateComplex& m);

TateComplex tensor(const TateComplex& a, const TateComplex& b);
TateComplex dual(const TateComplex& m);
TateComplex direct_sum(const TateComplex& a, const TateComplex& b);

// An equivariant chain map between complexes with the same p.
struct ChainMap {
  const TateComplex* source;
  const TateComplex* target;
  std::map<int, PMat> components;  // f[k]: source^k -> target^k
};

bool is_chain_map(const ChainMap& f);
TateComplex cone(const ChainMap& f);

// The trivial module K and the free module K[ϖ] in one degree.
TateComplex trivial_module(i64 p, int degree = 0, i64 dim = 1);
TateComplex free_module(i64 p, int degree = 0, i64 rank = 1);

// Periodicity witness: a roof R ≃ M (verified quasi-isomorphism) with a
// chain map R -> M[shift] whose cone is the free two-term (resp. one-term)
// complex from the norm/augmentation sequence.  shift = 2 always works;
// shift = 1 additionally when p = 2.
struct PeriodicityWitness {
  int shift;
  TateComplex roof;         // R, quasi-isomorphic to the input
  TateComplex shifted_in;   // M[shift]
  std::map<int, PMat> to_input;    // R -> M, quasi-isomorphism
  std::map<int, PMat> to_shifted;  // R -> M[shift]
  TateComplex witness_cone;        // cone(R -> M[shift]); passes is_perfect
};

PeriodicityWitness periodicity_witness(const TateComplex& m, int shift = 2);

// Simplicial cochains of the base with the induced ϖ-action (signs from the
// orientation of sorted vertex lists).  Requires a regular action of prime
// order.
TateComplex equivariant_cochains(const GComplex& g);

enum class LinkVerdict { Perfect, NotPerfect, NotApplicable };

// The stalkwise check at an isolated fixed vertex: the link carries a free
// action and its equivariant cochains must be perfect.  Returns
// NotApplicable when the link meets the fixed subcomplex.
LinkVerdict link_cone_perfection(const GComplex& g, const std::string& vertex);

}  // namespace smith
