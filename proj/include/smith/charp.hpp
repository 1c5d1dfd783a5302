#pragma once
// Quadratic forms over F_2 and F_4, their isometry groups, the
// characteristic-2 inclusions SO(2a) -> Sp(2a) and
// O(2a+1) x O(2b+1) -> O(2a+2b+1), and the Dickson invariant.

#include <functional>
#include <random>
#include <vector>

#include "smith/scalar.hpp"

namespace smith {

// The fields F_2 and F_4 (F_4 = F_2[w]/(w^2+w+1), elements 0,1,w=2,w+1=3).
class GF {
public:
  explicit GF(int q);
  int q() const { return q_; }
  int add(int a, int b) const { return a ^ b; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const;

private:
  int q_;
  int mul_[4][4] = {};
};

using FVec = std::vector<int>;
using FMat = std::vector<FVec>;

FMat identity_matrix(int d);
FMat mat_mul(const GF& f, const FMat& a, const FMat& b);
FVec mat_apply(const GF& f, const FMat& a, const FVec& v);
int mat_rank(const GF& f, FMat a);
bool mat_invertible(const GF& f, const FMat& a);

// Upper-triangular coefficient matrix Q with q(v) = v^T Q v.
struct QuadForm {
  GF field;
  int dim;
  FMat coeffs;

  int eval(const FVec& v) const;
  // polar form B(v,w) = q(v+w) + q(v) + q(w); matrix Q + Q^T
  FMat polar() const;
  bool polar_alternating() const;  // all B(v,v) = 0 (automatic in char 2)
  // radical of the polar form
  std::vector<FVec> polar_radical() const;
};

// Hyperbolic pairs x1x2 + x3x4 + ..., plus a square term when dim is odd.
QuadForm standard_form(int dim, int q);

// Isometry test on the basis and pairwise sums; this pins down q(gv) = q(v)
// for every v in characteristic 2.  Exhaustive vector check when q^d <= 2^16.
bool is_isometry(const QuadForm& form, const FMat& g);

// All isometries, by full matrix enumeration.  Guarded by q^(d*d) <= 2^18.
std::vector<FMat> enumerate_isometries(const QuadForm& form);

// Orthogonal transvection v -> v + (B(v,w)/q(w)) w for q(w) != 0.
FMat transvection(const QuadForm& form, const FVec& w);
FMat random_isometry(const QuadForm& form, std::mt19937_64& rng);

// Every isometry of the even standard form preserves the alternating polar
// form; the check reports whether all enumerated elements land in Sp(2a).
struct SoToSpReport {
  std::size_t group_size = 0;
  bool all_preserve_polar = false;
};
SoToSpReport so_to_sp(int a, int q);

// The quotient construction identifying (standard(2a+1) ⊕ standard(2b+1))/l
// with standard(2a+2b+1), l the radical line where the form vanishes.
class OddSumEmbedding {
public:
  OddSumEmbedding(int a, int b, int q);

  const QuadForm& source_a() const { return form_a_; }
  const QuadForm& source_b() const { return form_b_; }
  const QuadForm& target() const { return target_; }
  const QuadForm& sum_form() const { return sum_; }
  const FVec& radical_line() const { return line_; }

  // Image of (ga, gb) acting on the quotient, in target coordinates.
  FMat embed(const FMat& ga, const FMat& gb) const;

private:
  int a_, b_;
  GF field_;
  QuadForm form_a_, form_b_, sum_, target_;
  FVec line_;
  std::vector<FVec> quotient_reps_;  // representatives of the target basis
  FVec project(const FVec& v) const;
};

// Rank-based Dickson invariant: rank(g + 1) mod 2 on the polar-nondegenerate
// quotient.  Additive under composition; the char-2 stand-in for det.
int dickson_invariant(const QuadForm& form, const FMat& g);

// Every root of F4 is primitive in the weight lattice (gcd of weight-basis
// coordinates is 1), starting from the columns of its Cartan matrix.
bool f4_primitivity_check();

}  // namespace smith
