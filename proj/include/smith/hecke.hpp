#pragma once
// Hecke algebras of finite group actions: scalar kernels on ordered pairs
// of simplices under Euler-signed convolution, the equivariant Smith
// homomorphism, and the group-ring model for regular actions on discrete
// complexes.

#include <map>
#include <utility>
#include <vector>

#include "smith/cfun.hpp"
#include "smith/complex.hpp"

namespace smith {

class HeckeElement {
public:
  HeckeElement(ComplexPtr carrier, Ring ring) : carrier_(std::move(carrier)), ring_(ring) {}

  static HeckeElement all_pairs(ComplexPtr carrier, Ring ring, i64 value);
  static HeckeElement diagonal(ComplexPtr carrier, Ring ring, i64 value = 1);

  const ComplexPtr& carrier() const { return carrier_; }
  const Ring& ring() const { return ring_; }
  const std::map<std::pair<int, int>, i64>& kernel() const { return kernel_; }

  i64 at(int s, int t) const {
    auto it = kernel_.find({s, t});
    return it == kernel_.end() ? 0 : it->second;
  }
  void set(int s, int t, i64 value);
  void add(int s, int t, i64 value);

  bool is_zero() const { return kernel_.empty(); }
  bool operator==(const HeckeElement& o) const;

  HeckeElement operator+(const HeckeElement& o) const;

private:
  ComplexPtr carrier_;
  Ring ring_;
  std::map<std::pair<int, int>, i64> kernel_;
};

// (f1 ∗ f2)(σ,τ) = Σ_ρ (−1)^{dim ρ} f1(σ,ρ) f2(ρ,τ).
HeckeElement convolve(const HeckeElement& f1, const HeckeElement& f2);

HeckeElement reduce_mod(const HeckeElement& f, i64 p);

// A finite group of simplicial automorphisms with a distinguished cyclic
// subgroup ϖ of prime order.  Elements are generated from the given
// generators by closure.
class FiniteGroupAction {
public:
  FiniteGroupAction(ComplexPtr carrier, std::vector<std::vector<int>> generators,
                    std::vector<int> varpi_generator);

  const ComplexPtr& carrier() const { return carrier_; }
  const std::vector<std::vector<int>>& elements() const { return elements_; }
  const std::vector<int>& varpi() const { return elements_[varpi_]; }
  i64 prime() const { return prime_; }

  // Indices into elements() of the centralizer / normalizer of ϖ.
  const std::vector<int>& centralizer() const { return centralizer_; }
  const std::vector<int>& normalizer() const { return normalizer_; }

  GComplex varpi_action() const { return GComplex(carrier_, varpi(), prime_); }

  int simplex_image(const std::vector<int>& element, int simplex_id) const;

private:
  ComplexPtr carrier_;
  std::vector<std::vector<int>> elements_;  // closed under composition; [0] = id
  int varpi_ = 0;
  i64 prime_ = 0;
  std::vector<int> centralizer_, normalizer_;
};

// True iff kernel(gσ, gτ) = kernel(σ, τ) for every group element g.
bool check_invariance(const HeckeElement& f, const FiniteGroupAction& act);

// Same test for a single permutation (used for induced actions).
bool kernel_invariant_under(const HeckeElement& f, const ComplexPtr& c,
                            const std::vector<int>& vertex_perm);

// Restriction of a G-invariant F_p kernel to pairs of ϖ-fixed simplices; the
// output is certified invariant under the induced centralizer and normalizer
// actions on the fixed subcomplex.
struct SmithHecke {
  Subcomplex fixed;
  HeckeElement value;
};
SmithHecke smith_hecke(const HeckeElement& f, const FiniteGroupAction& act);

// Finite group presented by its multiplication table.  table[g][h] = gh.
class GroupTable {
public:
  explicit GroupTable(std::vector<std::vector<int>> table);

  static GroupTable cyclic(int n);
  static GroupTable direct_product(const GroupTable& a, const GroupTable& b);
  static GroupTable symmetric3();
  static GroupTable dihedral4();    // order 8
  static GroupTable quaternion8();  // order 8

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int g, int h) const { return table_[g][h]; }
  int inverse(int g) const { return inv_[g]; }
  int identity() const { return 0; }

private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
};

// The two mutually inverse identifications between Fun_G(G×G) and the group
// algebra k[G] for the left-regular action on the discrete complex G, plus
// the second normalization obtained from g ↦ g⁻¹.
struct GroupRingBridge {
  ComplexPtr carrier;  // |G| isolated vertices labeled g0..g{n-1}
  GroupTable group;
  Ring ring;

  // kernel -> coefficient vector a with a[g] = f(1, g)
  std::vector<i64> to_algebra(const HeckeElement& f) const;
  // coefficient vector -> kernel f(x, y) = a[x^{-1} y]
  HeckeElement from_algebra(const std::vector<i64>& a) const;

  // the involution a ↦ (g ↦ a[g^{-1}]) exchanging the two normalizations
  std::vector<i64> opposite(const std::vector<i64>& a) const;

  // group-algebra product
  std::vector<i64> multiply(const std::vector<i64>& a, const std::vector<i64>& b) const;

  // left-regular translation action on the carrier, as vertex permutations
  FiniteGroupAction regular_action() const;
};

GroupRingBridge group_ring_bridge(const GroupTable& group, Ring ring);

}  // namespace smith
