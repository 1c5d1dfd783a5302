#pragma once
// Seeded random generators, independent oracles, and the property-check
// harness behind `check all` and the acceptance suite.  Oracles here must
// stay independent of the implementation paths they cross-check.

#include <random>
#include <string>
#include <vector>

#include "smith/cfun.hpp"
#include "smith/complex.hpp"
#include "smith/fan.hpp"
#include "smith/hecke.hpp"
#include "smith/invariant.hpp"
#include "smith/tate.hpp"

namespace smith::checks {

using Rng = std::mt19937_64;

// ---- generators -----------------------------------------------------------

ComplexPtr random_complex(Rng& rng, int max_vertices, int max_generators, int max_arity);

// A random combinatorial sphere: a join of simplex boundaries, optionally
// barycentrically subdivided.  Every vertex star is a good open set, so the
// star duality exchange holds everywhere.
ComplexPtr random_sphere_complex(Rng& rng);

// A regular cyclic-p action: a symmetrized random complex, barycentrically
// subdivided when the raw action is not regular.  Simplex count stays at or
// below the cap.
GComplex random_regular_gcomplex(Rng& rng, i64 p, int max_simplices);

// A free action (no simplex stabilized): one vertex per orbit class per
// simplex.
GComplex random_free_gcomplex(Rng& rng, i64 p, int max_classes, int max_generators);

CFun random_cfun(Rng& rng, const ComplexPtr& c, Ring ring);
CFun random_invariant_cfun(Rng& rng, const GComplex& g, Ring ring);

// An invariant sign labeling with no mixed-sign simplex.
std::vector<int> random_invariant_signs(Rng& rng, const GComplex& g);

struct EquivariantMapInstance {
  GComplex source;
  GComplex target;
  SimplicialMap map;  // equivariant: map ∘ g = g ∘ map
};
EquivariantMapInstance random_equivariant_map(Rng& rng, i64 p);

HeckeElement random_kernel(Rng& rng, const ComplexPtr& c, Ring ring, int max_entries);
HeckeElement random_invariant_kernel(Rng& rng, const FiniteGroupAction& act, Ring ring,
                                     int max_orbits);

// ---- oracles --------------------------------------------------------------

// Matrix of an operator in the open-simplex basis (column = image of the
// indicator of that simplex).
std::vector<std::vector<i64>> matrix_of_dualize(const ComplexPtr& c);
std::vector<std::vector<i64>> matrix_of_pushforward(const SimplicialMap& u);

// χ_c(relint C ∩ {ξ < 1}) via an exact triangulation of the truncated cone
// inside the bounding box prescribed by the radius rule, evaluated with the
// simplicial Euler integral; dimensions 1 and 2 only.
i64 oracle_halfspace_chi(const Cone& c, int ambient_dim, const Covector& xi);
Scalar oracle_ft_value(const ConicCFun& f, const Covector& xi);

// Branching multiset for a restriction to an A1×A1-type subsystem by greedy
// weight sorting with box characters; independent of the Freudenthal path.
std::map<Vec, i64> oracle_branch_boxes(const InvariantElement& restricted);

// ---- harness ---------------------------------------------------------------

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // counterexample or counts
};

class Suite {
public:
  explicit Suite(std::uint64_t seed) : seed_(seed) {}

  // family ∈ {"euler", "hecke", "fan", "root", "charp", "tate", "io"}
  void run(const std::string& family);
  void run_all();

  void record(const std::string& name, bool passed, const std::string& detail = "");
  const std::vector<CheckResult>& results() const { return results_; }
  bool all_passed() const;
  // deterministic, sorted by check name; format "tsv" or "text"
  std::string report(const std::string& format) const;

  Rng rng_for(const std::string& family) const;

private:
  std::uint64_t seed_;
  std::vector<CheckResult> results_;
};

void check_euler(Suite& s);
void check_hecke(Suite& s);
void check_fan(Suite& s);
void check_root(Suite& s);
void check_charp(Suite& s);
void check_tate(Suite& s);
void check_io(Suite& s);

}  // namespace smith::checks
