#pragma once
// Constructible functions on finite simplicial complexes, stored as
// coefficients of indicators of open simplices, and the exact calculus on
// them: Euler integration, pullback, pushforward, duality, the upper
// specialization, and the mod-p Smith restriction.

#include <map>

#include "smith/complex.hpp"
#include "smith/scalar.hpp"

namespace smith {

class CFun {
public:
  CFun(ComplexPtr carrier, Ring ring) : carrier_(std::move(carrier)), ring_(ring) {}

  static CFun constant(ComplexPtr carrier, Ring ring, i64 value);
  static CFun indicator(ComplexPtr carrier, Ring ring, int simplex_id, i64 value = 1);

  const ComplexPtr& carrier() const { return carrier_; }
  const Ring& ring() const { return ring_; }
  const std::map<int, i64>& coefficients() const { return coeff_; }

  i64 at(int simplex_id) const {
    auto it = coeff_.find(simplex_id);
    return it == coeff_.end() ? 0 : it->second;
  }
  void set(int simplex_id, i64 value);
  void add(int simplex_id, i64 value);

  bool is_zero() const { return coeff_.empty(); }

  CFun operator+(const CFun& o) const;
  CFun operator-(const CFun& o) const;
  CFun scaled(i64 c) const;
  bool operator==(const CFun& o) const;

private:
  ComplexPtr carrier_;
  Ring ring_;
  std::map<int, i64> coeff_;  // absent = 0; values ring-normalized
};

// Σ_σ f(σ)·(−1)^{dim σ}; equals the Euler-characteristic-weighted sum of
// level sets because χ_c of an open d-simplex is (−1)^d.
Scalar euler_integral(const CFun& f);

// (u^* g)(τ) = g(u(τ)).
CFun pullback(const SimplicialMap& u, const CFun& g);

// Linear extension of 1_{relint τ} ↦ (−1)^{dim τ − dim u(τ)}·1_{relint u(τ)}.
CFun pushforward(const SimplicialMap& u, const CFun& f);

// (𝔻f)(σ) = Σ_{τ ⊇ σ} (−1)^{dim τ} f(τ).  An exact involution.
CFun dualize(const CFun& f);

// u_* = 𝔻 ∘ u_! ∘ 𝔻 and u^! = 𝔻 ∘ u^* ∘ 𝔻.
CFun pushforward_star(const SimplicialMap& u, const CFun& f);
CFun pullback_shriek(const SimplicialMap& u, const CFun& g);

// Standard and costandard functions of the star of a vertex:
// i_U = 1 on the closed star, j_U = (−1)^{dim U} on the open star.
struct StarFunctions {
  CFun standard;    // i_U
  CFun costandard;  // j_U
};
StarFunctions standard_costandard(const ComplexPtr& m, const std::string& vertex);

// Explicit reduction Z -> F_p; Smith operations never reduce implicitly.
CFun reduce_mod(const CFun& f, i64 p);

// True when f(g·σ) = f(σ) for every group element.
bool is_invariant(const GComplex& g, const CFun& f);

// Restriction of an invariant F_p-function to the fixed subcomplex.
// Requires ring F_p with p the prime of the group order and a regular action.
CFun smith_restrict(const GComplex& g, const CFun& f, const Subcomplex& fixed);
CFun smith_restrict(const GComplex& g, const CFun& f);

// Upper specialization ψ⁺ for a sign labeling (−1, 0, +1 per vertex) with no
// simplex carrying both signs: i^* j_* j^* f onto the zero subcomplex.
struct Specialization {
  Subcomplex zero_locus;
  CFun value;
};
Specialization specialize(const ComplexPtr& c, const std::vector<int>& signs, const CFun& f);

// Transport a function through a barycentric subdivision: the value on a
// subdivision cell is the value on the open base simplex containing it.
CFun transport(const Subdivision& sub, const CFun& f);

}  // namespace smith
