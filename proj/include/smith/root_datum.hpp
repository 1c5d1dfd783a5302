#pragma once
// Based root data on a fixed ambient lattice pair, reflection-closure root
// systems, highest roots, the classification of order-p elements with
// semisimple centralizer by nodes of the extended Dynkin diagram, and
// Langlands duality.
//
// Coordinates: X^* and X_* are both Z^r with the dot-product pairing.  For a
// simply connected datum the X^* basis is the fundamental weights, so simple
// roots are the columns of the Cartan matrix and simple coroots are the
// standard basis vectors.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "smith/scalar.hpp"

namespace smith {

using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;

enum class Isogeny { SimplyConnected, Adjoint, Sublattice };

struct RootPair {
  Vec root;    // in X^* coordinates
  Vec coroot;  // in X_* coordinates
  bool operator<(const RootPair& o) const { return root < o.root; }
  bool operator==(const RootPair& o) const { return root == o.root && coroot == o.coroot; }
};

class RootDatum {
public:
  // Classical or exceptional type: 'A'..'G', rank, isogeny tag.
  static RootDatum simple(char type, int rank, Isogeny isogeny = Isogeny::SimplyConnected);

  // A datum on the same ambient lattice with explicitly given simple pairs.
  static RootDatum from_simple_pairs(int ambient_rank, std::vector<RootPair> pairs,
                                     Isogeny isogeny, std::string name);

  int ambient_rank() const { return ambient_rank_; }
  int semisimple_rank() const { return static_cast<int>(simple_.size()); }
  const std::vector<RootPair>& simple_pairs() const { return simple_; }
  const std::string& name() const { return name_; }
  Isogeny isogeny() const { return isogeny_; }

  // cartan[i][j] = <alpha_j, alpha_i^vee>
  Mat cartan() const;

  // All roots with their coroots, reflection closure of the simple pairs.
  const std::vector<RootPair>& roots() const { return roots_; }

  bool irreducible() const;

  // s_i on X^*: lambda - <lambda, alpha_i^vee> alpha_i
  Vec reflect_weight(int i, const Vec& v) const;
  // s_i on X_*: mu - <alpha_i, mu> alpha_i^vee
  Vec reflect_coweight(int i, const Vec& v) const;

  bool dominant_weight(const Vec& v) const;    // <v, alpha_i^vee> >= 0 for all i
  bool dominant_coweight(const Vec& v) const;  // <alpha_i, v> >= 0 for all i

  Vec two_rho() const;          // sum of positive roots
  Vec two_rho_coweight() const; // sum of positive coroots

  // W-invariant pairing on X^* x X^*: sum over positive coroots of
  // <x, gamma^vee><y, gamma^vee>.  Exact, integer-valued.
  i64 invariant_form(const Vec& x, const Vec& y) const;

  // The positive system: roots expressible with nonnegative simple
  // coefficients; coefficient vector of a root in the simple basis.
  Vec simple_coefficients(const Vec& root) const;
  const std::vector<RootPair>& positive_roots() const { return positive_; }

  // |X^*_lattice / Q| where Q is the root lattice: the center order at the
  // lattice level.
  i64 center_order() const;

private:
  int ambient_rank_ = 0;
  std::vector<RootPair> simple_;
  std::vector<RootPair> roots_;
  std::vector<RootPair> positive_;
  std::map<Vec, Vec> coeff_cache_;  // root -> simple coefficients
  Mat gram_;                        // invariant_form(x,y) = x^T gram y
  Isogeny isogeny_ = Isogeny::SimplyConnected;
  Mat char_lattice_;  // rows span X^* inside the ambient weight lattice
  std::string name_;

  void close_roots();
  Vec compute_simple_coefficients(const Vec& root) const;
  friend RootDatum dual_datum(const RootDatum& rd);
};

using RootDatumPtr = std::shared_ptr<const RootDatum>;

inline RootDatumPtr share(RootDatum rd) {
  return std::make_shared<const RootDatum>(std::move(rd));
}

// Coefficients of the highest root in the simple-root basis.
// Requires an irreducible datum.
Vec highest_root_coeffs(const RootDatum& rd);
RootPair highest_root(const RootDatum& rd);

struct KacNode {
  int index;     // which simple root
  i64 order;     // its coefficient in the highest root
  Vec beta_num;  // fundamental coweight beta_i, numerators
  i64 beta_den;  // common denominator
};

// Nodes of coefficient exactly p: the order-p elements with semisimple
// centralizer, one per node, the element being beta_i(zeta_p).
std::vector<KacNode> kac_order_p_nodes(const RootDatum& rd, i64 p);

// Root datum of the centralizer: simple roots are the extended-diagram nodes
// minus the chosen one.  Cross-validated against the congruence subsystem
// {alpha : coefficient_i(alpha) = 0 mod c_i}; a mismatch throws.
RootDatum centralizer_datum(const RootDatum& rd, const KacNode& node);

// Swap roots and coroots (and the lattice bookkeeping).
RootDatum dual_datum(const RootDatum& rd);

struct CorootCompatibilityReport {
  bool passed = true;
  std::vector<std::string> violations;
};

// Checks that coroots of dual(centralizer) sit inside coroots of dual(rd)
// exactly as roots of the centralizer sit inside roots of rd, and that the
// Weyl reflections match on both sides of the duality.
CorootCompatibilityReport verify_coroot_compatibility(const RootDatum& rd, const KacNode& node);

}  // namespace smith
