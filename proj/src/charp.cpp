#include "smith/charp.hpp"

#include <algorithm>
#include <numeric>

#include "smith/root_datum.hpp"

namespace smith {

GF::GF(int q) : q_(q) {
  if (q != 2 && q != 4) throw error("GF: only F_2 and F_4 are supported");
  // multiplication: F_4 as F_2[w]/(w^2+w+1), bits (x0 + x1 w)
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (q == 2) {
        mul_[a][b] = a & b;
        continue;
      }
      int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
      int c0 = (a0 & b0) ^ (a1 & b1);
      int c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
      mul_[a][b] = c0 | (c1 << 1);
    }
}

int GF::inv(int a) const {
  if (a == 0) throw error("GF: inverse of zero");
  for (int b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  throw error("GF: no inverse (internal)");
}

FMat identity_matrix(int d) {
  FMat m(d, FVec(d, 0));
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

FMat mat_mul(const GF& f, const FMat& a, const FMat& b) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b[0].size());
  const int k = static_cast<int>(b.size());
  FMat c(n, FVec(m, 0));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (int j = 0; j < m; ++j) c[i][j] = f.add(c[i][j], f.mul(a[i][l], b[l][j]));
    }
  return c;
}

FVec mat_apply(const GF& f, const FMat& a, const FVec& v) {
  const int n = static_cast<int>(a.size());
  FVec out(n, 0);
  for (int i = 0; i < n; ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] = f.add(out[i], f.mul(a[i][j], v[j]));
  return out;
}

int mat_rank(const GF& f, FMat a) {
  if (a.empty()) return 0;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    int piv_inv = f.inv(a[rank][c]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      int factor = f.mul(a[r][c], piv_inv);
      for (int cc = 0; cc < cols; ++cc) a[r][cc] = f.add(a[r][cc], f.mul(factor, a[rank][cc]));
    }
    ++rank;
  }
  return rank;
}

bool mat_invertible(const GF& f, const FMat& a) {
  return mat_rank(f, a) == static_cast<int>(a.size());
}

int QuadForm::eval(const FVec& v) const {
  int s = 0;
  for (int i = 0; i < dim; ++i) {
    if (v[i] == 0) continue;
    for (int j = i; j < dim; ++j) s = field.add(s, field.mul(coeffs[i][j], field.mul(v[i], v[j])));
  }
  return s;
}

FMat QuadForm::polar() const {
  FMat b(dim, FVec(dim, 0));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) b[i][j] = field.add(coeffs[i][j], coeffs[j][i]);
  return b;
}

bool QuadForm::polar_alternating() const {
  FMat b = polar();
  for (int i = 0; i < dim; ++i)
    if (b[i][i] != 0) return false;
  return true;
}

std::vector<FVec> QuadForm::polar_radical() const {
  // kernel of B by elimination on the transpose-augmented system
  FMat b = polar();
  // reduce b; track free columns
  const int n = dim;
  FMat a = b;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < n && rank < n; ++c) {
    int p = -1;
    for (int r = rank; r < n; ++r)
      if (a[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(a[rank], a[p]);
    int inv = field.inv(a[rank][c]);
    for (int cc = 0; cc < n; ++cc) a[rank][cc] = field.mul(a[rank][cc], inv);
    for (int r = 0; r < n; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      int f0 = a[r][c];
      for (int cc = 0; cc < n; ++cc) a[r][cc] = field.add(a[r][cc], field.mul(f0, a[rank][cc]));
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<FVec> kernel;
  for (int c = 0; c < n; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
    FVec v(n, 0);
    v[c] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = a[r][c];  // char 2: -x = x
    kernel.push_back(std::move(v));
  }
  return kernel;
}

QuadForm standard_form(int dim, int q) {
  if (dim < 1) throw error("standard_form: dimension must be positive");
  QuadForm f{GF(q), dim, FMat(dim, FVec(dim, 0))};
  for (int i = 0; i + 1 < dim; i += 2) f.coeffs[i][i + 1] = 1;
  if (dim % 2) f.coeffs[dim - 1][dim - 1] = 1;
  return f;
}

bool is_isometry(const QuadForm& form, const FMat& g) {
  const GF& f = form.field;
  const int d = form.dim;
  if (static_cast<int>(g.size()) != d) return false;
  if (!mat_invertible(f, g)) return false;
  std::vector<FVec> images(d);
  for (int i = 0; i < d; ++i) {
    FVec e(d, 0);
    e[i] = 1;
    images[i] = mat_apply(f, g, e);
    if (form.eval(images[i]) != form.eval(e)) return false;
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      FVec sum(d, 0), gsum(d, 0);
      for (int k0 = 0; k0 < d; ++k0) {
        sum[k0] = f.add(i == k0 ? 1 : 0, j == k0 ? 1 : 0);
        gsum[k0] = f.add(images[i][k0], images[j][k0]);
      }
      if (form.eval(gsum) != form.eval(sum)) return false;
    }
  // exhaustive confirmation at desk scale
  double total = 1;
  for (int i = 0; i < d; ++i) total *= f.q();
  if (total <= 65536.0) {
    std::vector<int> digits(d, 0);
    FVec v(d, 0);
    while (true) {
      for (int i = 0; i < d; ++i) v[i] = digits[i];
      if (form.eval(mat_apply(f, g, v)) != form.eval(v)) return false;
      int pos = 0;
      while (pos < d && ++digits[pos] == f.q()) digits[pos++] = 0;
      if (pos == d) break;
    }
  }
  return true;
}

std::vector<FMat> enumerate_isometries(const QuadForm& form) {
  const GF& f = form.field;
  const int d = form.dim;
  double total = 1;
  for (int i = 0; i < d * d; ++i) total *= f.q();
  if (total > 262144.0)
    throw error("enumerate_isometries: group too large; use transvection sampling");
  std::vector<FMat> out;
  std::vector<int> digits(d * d, 0);
  FMat g(d, FVec(d, 0));
  while (true) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g[i][j] = digits[i * d + j];
    if (is_isometry(form, g)) out.push_back(g);
    int pos = 0;
    while (pos < d * d && ++digits[pos] == f.q()) digits[pos++] = 0;
    if (pos == d * d) break;
  }
  return out;
}

FMat transvection(const QuadForm& form, const FVec& w) {
  const GF& f = form.field;
  const int d = form.dim;
  int qw = form.eval(w);
  if (qw == 0) throw error("transvection: q(w) must be nonzero");
  FMat b = form.polar();
  FMat t = identity_matrix(d);
  int qinv = f.inv(qw);
  for (int j = 0; j < d; ++j) {
    // column j: image of e_j is e_j + (B(e_j, w)/q(w)) w
    int bw = 0;
    for (int k0 = 0; k0 < d; ++k0) bw = f.add(bw, f.mul(b[j][k0], w[k0]));
    int c = f.mul(bw, qinv);
    for (int i = 0; i < d; ++i) t[i][j] = f.add(t[i][j], f.mul(c, w[i]));
  }
  return t;
}

FMat random_isometry(const QuadForm& form, std::mt19937_64& rng) {
  const GF& f = form.field;
  const int d = form.dim;
  FMat g = identity_matrix(d);
  int steps = 2 * d + 4;
  for (int s = 0; s < steps; ++s) {
    FVec w(d, 0);
    int tries = 0;
    do {
      for (int i = 0; i < d; ++i) w[i] = static_cast<int>(rng() % f.q());
      if (++tries > 1000) throw error("random_isometry: cannot find anisotropic vector");
    } while (form.eval(w) == 0);
    g = mat_mul(f, transvection(form, w), g);
  }
  if (!is_isometry(form, g)) throw error("random_isometry: product is not an isometry (internal)");
  return g;
}

SoToSpReport so_to_sp(int a, int q) {
  if (a < 1) throw error("so_to_sp: a must be >= 1");
  QuadForm form = standard_form(2 * a, q);
  FMat b = form.polar();
  auto group = enumerate_isometries(form);
  SoToSpReport report;
  report.group_size = group.size();
  report.all_preserve_polar = true;
  const GF& f = form.field;
  const int d = form.dim;
  for (const auto& g : group) {
    // B(gv, gw) = B(v, w) on all basis pairs
    for (int i = 0; i < d && report.all_preserve_polar; ++i)
      for (int j = 0; j < d && report.all_preserve_polar; ++j) {
        FVec ei(d, 0), ej(d, 0);
        ei[i] = 1;
        ej[j] = 1;
        FVec gi = mat_apply(f, g, ei), gj = mat_apply(f, g, ej);
        int lhs = 0;
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c) lhs = f.add(lhs, f.mul(gi[r], f.mul(b[r][c], gj[c])));
        if (lhs != b[i][j]) report.all_preserve_polar = false;
      }
    if (!report.all_preserve_polar) break;
  }
  return report;
}

OddSumEmbedding::OddSumEmbedding(int a, int b, int q)
    : a_(a),
      b_(b),
      field_(q),
      form_a_(standard_form(2 * a + 1, q)),
      form_b_(standard_form(2 * b + 1, q)),
      sum_{GF(q), 0, {}},
      target_(standard_form(2 * a + 2 * b + 1, q)) {
  if (a < 1 || b < 1) throw error("odd_orthogonal_sum_embedding: a, b must be >= 1");
  const int da = 2 * a + 1, db = 2 * b + 1, d = da + db;
  if (d > 12) throw error("odd_orthogonal_sum_embedding: dimension too large to sample");
  sum_.dim = d;
  sum_.coeffs.assign(d, FVec(d, 0));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) sum_.coeffs[i][j] = form_a_.coeffs[i][j];
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j) sum_.coeffs[da + i][da + j] = form_b_.coeffs[i][j];

  // the line x_{2a+1} = y_{2b+1}, all other coordinates zero
  line_.assign(d, 0);
  line_[da - 1] = 1;
  line_[d - 1] = 1;
  if (sum_.eval(line_) != 0)
    throw error("odd_orthogonal_sum_embedding: form does not vanish on the line (internal)");
  FMat bsum = sum_.polar();
  for (int i = 0; i < d; ++i) {
    int pairing = 0;
    for (int j = 0; j < d; ++j) pairing = field_.add(pairing, field_.mul(bsum[i][j], line_[j]));
    if (pairing != 0)
      throw error("odd_orthogonal_sum_embedding: line is not perpendicular to everything (internal)");
  }

  // quotient basis: a-block pairs, b-block pairs, then the common square term
  for (int i = 0; i < 2 * a; ++i) {
    FVec e(d, 0);
    e[i] = 1;
    quotient_reps_.push_back(e);
  }
  for (int i = 0; i < 2 * b; ++i) {
    FVec e(d, 0);
    e[da + i] = 1;
    quotient_reps_.push_back(e);
  }
  FVec e(d, 0);
  e[da - 1] = 1;
  quotient_reps_.push_back(e);

  // the quotient form in this basis must be the standard form
  const int dt = 2 * a + 2 * b + 1;
  for (int i = 0; i < dt; ++i)
    for (int j = i; j < dt; ++j) {
      FVec sum_v(d, 0);
      for (int k0 = 0; k0 < d; ++k0)
        sum_v[k0] = field_.add(quotient_reps_[i][k0], quotient_reps_[j][k0]);
      int expect;
      if (i == j) {
        expect = target_.eval([&] {
          FVec t(dt, 0);
          t[i] = 1;
          return t;
        }());
        if (sum_.eval(quotient_reps_[i]) != expect)
          throw error("odd_orthogonal_sum_embedding: quotient form mismatch (internal)");
      } else {
        FVec ti(dt, 0), tj(dt, 0), ts(dt, 0);
        ti[i] = 1;
        tj[j] = 1;
        ts[i] = 1;
        ts[j] = 1;
        int lhs = sum_.eval(sum_v);
        int rhs = target_.eval(ts);
        if (lhs != rhs)
          throw error("odd_orthogonal_sum_embedding: quotient pair values mismatch (internal)");
      }
    }
}

FVec OddSumEmbedding::project(const FVec& v) const {
  const int da = 2 * a_ + 1, d = da + 2 * b_ + 1;
  // eliminate the last coordinate against the line, then read the basis
  FVec w = v;
  int t = w[d - 1];
  if (t != 0) {
    for (int i = 0; i < d; ++i) w[i] = field_.add(w[i], field_.mul(t, line_[i]));
  }
  const int dt = 2 * a_ + 2 * b_ + 1;
  FVec out(dt, 0);
  for (int i = 0; i < 2 * a_; ++i) out[i] = w[i];
  for (int i = 0; i < 2 * b_; ++i) out[2 * a_ + i] = w[da + i];
  out[dt - 1] = w[da - 1];
  return out;
}

FMat OddSumEmbedding::embed(const FMat& ga, const FMat& gb) const {
  const int da = 2 * a_ + 1, db = 2 * b_ + 1, d = da + db;
  if (static_cast<int>(ga.size()) != da || static_cast<int>(gb.size()) != db)
    throw error("odd_orthogonal_sum_embedding: block size mismatch");
  // block sum action
  FMat g(d, FVec(d, 0));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) g[i][j] = ga[i][j];
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j) g[da + i][da + j] = gb[i][j];
  // the action must fix the line (isometries fix the odd radical vector)
  FVec img = mat_apply(field_, g, line_);
  if (img != line_)
    throw error("odd_orthogonal_sum_embedding: element does not fix the radical line");
  const int dt = 2 * a_ + 2 * b_ + 1;
  FMat out(dt, FVec(dt, 0));
  for (int col = 0; col < dt; ++col) {
    FVec image = project(mat_apply(field_, g, quotient_reps_[col]));
    for (int row = 0; row < dt; ++row) out[row][col] = image[row];
  }
  return out;
}

int dickson_invariant(const QuadForm& form, const FMat& g) {
  if (!is_isometry(form, g)) throw error("dickson_invariant: input is not an isometry");
  const GF& f = form.field;
  const int d = form.dim;
  auto radical = form.polar_radical();
  if (radical.empty()) {
    FMat m = g;
    for (int i = 0; i < d; ++i) m[i][i] = f.add(m[i][i], 1);
    return mat_rank(f, m) % 2;
  }
  if (radical.size() != 1 || d % 2 == 0)
    throw error("dickson_invariant: polar radical must be a line in odd dimension");
  // quotient by the radical: isometries fix it, so striking its coordinate
  // after a basis change works; for the standard form the radical is e_{d-1}
  FVec rad = radical[0];
  int pivot = -1;
  for (int i = 0; i < d; ++i)
    if (rad[i] != 0) pivot = i;
  FMat m(d - 1, FVec(d - 1, 0));
  int r2 = 0;
  for (int i = 0; i < d; ++i) {
    if (i == pivot) continue;
    int c2 = 0;
    for (int j = 0; j < d; ++j) {
      if (j == pivot) continue;
      m[r2][c2] = g[i][j];
      ++c2;
    }
    ++r2;
  }
  for (int i = 0; i < d - 1; ++i) m[i][i] = f.add(m[i][i], 1);
  return mat_rank(f, m) % 2;
}

bool f4_primitivity_check() {
  RootDatum f4 = RootDatum::simple('F', 4);
  Mat cartan = f4.cartan();
  for (int col = 0; col < 4; ++col) {
    i64 g = 0;
    for (int row = 0; row < 4; ++row) g = std::gcd(g, cartan[row][col]);
    if (g != 1) return false;
  }
  if (f4.roots().size() != 48) return false;
  for (const auto& p : f4.roots()) {
    i64 g = 0;
    for (i64 x : p.root) g = std::gcd(g, x);
    if (g != 1) return false;
  }
  return true;
}

}  // namespace smith
