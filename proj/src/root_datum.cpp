#include "smith/root_datum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace smith {

namespace {

i64 gcd64(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 dot(const Vec& a, const Vec& b) {
  i64 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Vec scale(const Vec& a, i64 t) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] * t;
  return c;
}

Vec negate(const Vec& a) { return scale(a, -1); }

// Solve M x = b exactly over Q for a square integer matrix; returns
// numerators and the common denominator (positive).  Throws when singular.
std::pair<Vec, i64> solve_rational(Mat m, Vec b) {
  const int n = static_cast<int>(m.size());
  // fraction-free Gauss-Jordan with a tracked denominator (Cramer via Bareiss
  // would also do; sizes are tiny)
  std::vector<std::vector<i64>> a(n, std::vector<i64>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n] = b[i];
  }
  std::vector<int> piv(n, -1);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int r = 0; r < n; ++r) {
      if (a[r][col] == 0) continue;
      bool used = false;
      for (int c = 0; c < col; ++c) used = used || piv[c] == r;
      if (!used) {
        p = r;
        break;
      }
    }
    if (p < 0) throw error("solve_rational: singular matrix");
    piv[col] = p;
    for (int r = 0; r < n; ++r) {
      if (r == p || a[r][col] == 0) continue;
      i64 x = a[p][col], y = a[r][col];
      i64 g = gcd64(x, y);
      i64 mp = y / g, mr = x / g;
      for (int c = 0; c <= n; ++c) a[r][c] = a[r][c] * mr - a[p][c] * mp;
      i64 rg = 0;
      for (int c = 0; c <= n; ++c) rg = gcd64(rg, a[r][c]);
      if (rg > 1)
        for (int c = 0; c <= n; ++c) a[r][c] /= rg;
    }
  }
  Vec num(n);
  i64 den = 1;
  for (int col = 0; col < n; ++col) den = den / gcd64(den, a[piv[col]][col]) * a[piv[col]][col];
  if (den == 0) throw error("solve_rational: singular matrix");
  for (int col = 0; col < n; ++col) {
    i64 d = a[piv[col]][col];
    num[col] = a[piv[col]][n] * (den / d);
  }
  if (den < 0) {
    den = -den;
    for (auto& x : num) x = -x;
  }
  return {num, den};
}

i64 det_int(Mat m) {
  const int n = static_cast<int>(m.size());
  // Bareiss fraction-free determinant
  i64 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      for (auto& x : m[k]) x = -x;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return m[n - 1][n - 1];
}

Mat cartan_matrix(char type, int n) {
  auto chain = [&](Mat& a, int i, int j) {  // single bond
    a[i][j] = -1;
    a[j][i] = -1;
  };
  Mat a(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) chain(a, i, i + 1);
      break;
    case 'B':  // alpha_n short
      if (n < 2) throw error("root_datum: B requires rank >= 2");
      for (int i = 0; i + 2 < n; ++i) chain(a, i, i + 1);
      a[n - 2][n - 1] = -1;  // <alpha_n, alpha_{n-1}^vee>
      a[n - 1][n - 2] = -2;  // <alpha_{n-1}, alpha_n^vee>
      break;
    case 'C':  // alpha_n long
      if (n < 2) throw error("root_datum: C requires rank >= 2");
      for (int i = 0; i + 2 < n; ++i) chain(a, i, i + 1);
      a[n - 2][n - 1] = -2;
      a[n - 1][n - 2] = -1;
      break;
    case 'D':
      if (n < 3) throw error("root_datum: D requires rank >= 3");
      for (int i = 0; i + 2 < n; ++i) chain(a, i, i + 1);
      chain(a, n - 3, n - 1);
      break;
    case 'E': {
      if (n < 6 || n > 8) throw error("root_datum: E requires rank 6..8");
      // Bourbaki: chain 1-3-4-5-...-n, branch 2 attached to 4
      chain(a, 0, 2);
      for (int i = 2; i + 1 < n; ++i) chain(a, i, i + 1);
      chain(a, 1, 3);
      break;
    }
    case 'F': {
      if (n != 4) throw error("root_datum: F requires rank 4");
      chain(a, 0, 1);
      chain(a, 2, 3);
      a[1][2] = -1;  // <alpha_3, alpha_2^vee>
      a[2][1] = -2;  // <alpha_2, alpha_3^vee>
      break;
    }
    case 'G': {
      if (n != 2) throw error("root_datum: G requires rank 2");
      a[0][1] = -1;  // alpha_1 long, alpha_2 short
      a[1][0] = -3;
      break;
    }
    default:
      throw error(std::string("root_datum: unknown type ") + type);
  }
  return a;
}

}  // namespace

RootDatum RootDatum::simple(char type, int rank, Isogeny isogeny) {
  if (rank < 1 || rank > 8) throw error("root_datum: rank must be 1..8");
  if ((type == 'B' || type == 'C') && rank == 1) type = 'A';  // B1 = C1 = A1
  Mat cartan = cartan_matrix(type, rank);
  std::vector<RootPair> pairs(rank);
  for (int j = 0; j < rank; ++j) {
    pairs[j].root.resize(rank);
    for (int i = 0; i < rank; ++i) pairs[j].root[i] = cartan[i][j];
    pairs[j].coroot.assign(rank, 0);
    pairs[j].coroot[j] = 1;
  }
  RootDatum rd = from_simple_pairs(rank, std::move(pairs), isogeny,
                                   std::string(1, type) + std::to_string(rank));
  if (isogeny == Isogeny::Adjoint) {
    // character lattice = root lattice, rows are the simple roots
    rd.char_lattice_.clear();
    for (const auto& p : rd.simple_) rd.char_lattice_.push_back(p.root);
    if (rd.semisimple_rank() != rank)
      throw error("root_datum: adjoint tag requires a semisimple datum");
  }
  return rd;
}

RootDatum RootDatum::from_simple_pairs(int ambient_rank, std::vector<RootPair> pairs,
                                       Isogeny isogeny, std::string name) {
  RootDatum rd;
  rd.ambient_rank_ = ambient_rank;
  rd.simple_ = std::move(pairs);
  rd.isogeny_ = isogeny;
  rd.name_ = std::move(name);
  rd.char_lattice_.assign(ambient_rank, Vec(ambient_rank, 0));
  for (int i = 0; i < ambient_rank; ++i) rd.char_lattice_[i][i] = 1;
  for (const auto& p : rd.simple_) {
    if (static_cast<int>(p.root.size()) != ambient_rank ||
        static_cast<int>(p.coroot.size()) != ambient_rank)
      throw error("root_datum: vector dimension mismatch");
    if (dot(p.root, p.coroot) != 2)
      throw error("root_datum: <alpha, alpha^vee> must equal 2");
  }
  rd.close_roots();
  return rd;
}

void RootDatum::close_roots() {
  std::set<RootPair> closed(simple_.begin(), simple_.end());
  std::vector<RootPair> queue(simple_.begin(), simple_.end());
  while (!queue.empty()) {
    RootPair p = queue.back();
    queue.pop_back();
    for (size_t i = 0; i < simple_.size(); ++i) {
      RootPair q;
      q.root = add(p.root, scale(simple_[i].root, -dot(p.root, simple_[i].coroot)));
      q.coroot = add(p.coroot, scale(simple_[i].coroot, -dot(simple_[i].root, p.coroot)));
      if (closed.insert(q).second) queue.push_back(q);
      if (closed.size() > 1000) throw error("root_datum: reflection closure too large");
    }
  }
  // sanity: closed under negation (w0 exists); coroot consistency
  for (const auto& p : closed) {
    RootPair neg{negate(p.root), negate(p.coroot)};
    if (!closed.count(neg)) throw error("root_datum: closure is not symmetric");
  }
  roots_.assign(closed.begin(), closed.end());

  positive_.clear();
  coeff_cache_.clear();
  for (const auto& p : roots_) {
    Vec c = compute_simple_coefficients(p.root);
    bool nonneg = std::all_of(c.begin(), c.end(), [](i64 x) { return x >= 0; });
    coeff_cache_[p.root] = std::move(c);
    if (nonneg) positive_.push_back(p);
  }
  gram_.assign(ambient_rank_, Vec(ambient_rank_, 0));
  for (const auto& p : positive_)
    for (int i = 0; i < ambient_rank_; ++i)
      for (int j = 0; j < ambient_rank_; ++j) gram_[i][j] += p.coroot[i] * p.coroot[j];
}

Mat RootDatum::cartan() const {
  const int k = semisimple_rank();
  Mat a(k, Vec(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[i][j] = dot(simple_[j].root, simple_[i].coroot);
  return a;
}

bool RootDatum::irreducible() const {
  const int k = semisimple_rank();
  if (k == 0) return false;
  std::vector<int> comp(k, -1);
  std::vector<int> stack{0};
  comp[0] = 0;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < k; ++j)
      if (comp[j] < 0 && dot(simple_[j].root, simple_[i].coroot) != 0) {
        comp[j] = 0;
        stack.push_back(j);
      }
  }
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

Vec RootDatum::reflect_weight(int i, const Vec& v) const {
  return add(v, scale(simple_[i].root, -dot(v, simple_[i].coroot)));
}

Vec RootDatum::reflect_coweight(int i, const Vec& v) const {
  return add(v, scale(simple_[i].coroot, -dot(simple_[i].root, v)));
}

bool RootDatum::dominant_weight(const Vec& v) const {
  for (const auto& p : simple_)
    if (dot(v, p.coroot) < 0) return false;
  return true;
}

bool RootDatum::dominant_coweight(const Vec& v) const {
  for (const auto& p : simple_)
    if (dot(p.root, v) < 0) return false;
  return true;
}

Vec RootDatum::compute_simple_coefficients(const Vec& root) const {
  const int k = semisimple_rank();
  // solve sum c_j alpha_j = root by pairing with coroots:
  // sum_j <alpha_j, alpha_i^vee> c_j = <root, alpha_i^vee>
  Mat m(k, Vec(k));
  Vec b(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) m[i][j] = dot(simple_[j].root, simple_[i].coroot);
    b[i] = dot(root, simple_[i].coroot);
  }
  auto [num, den] = solve_rational(m, b);
  Vec c(k);
  for (int j = 0; j < k; ++j) {
    if (num[j] % den != 0) throw error("simple_coefficients: root not in the root lattice");
    c[j] = num[j] / den;
  }
  // verify (the Cartan pairing determines the root only inside the span)
  Vec check(ambient_rank_, 0);
  for (int j = 0; j < k; ++j) check = add(check, scale(simple_[j].root, c[j]));
  if (check != root) throw error("simple_coefficients: root outside the span of simple roots");
  return c;
}

Vec RootDatum::simple_coefficients(const Vec& root) const {
  auto it = coeff_cache_.find(root);
  if (it != coeff_cache_.end()) return it->second;
  return compute_simple_coefficients(root);
}

Vec RootDatum::two_rho() const {
  Vec s(ambient_rank_, 0);
  for (const auto& p : positive_roots()) s = add(s, p.root);
  return s;
}

Vec RootDatum::two_rho_coweight() const {
  Vec s(ambient_rank_, 0);
  for (const auto& p : positive_roots()) s = add(s, p.coroot);
  return s;
}

i64 RootDatum::invariant_form(const Vec& x, const Vec& y) const {
  i64 s = 0;
  for (int i = 0; i < ambient_rank_; ++i) {
    if (x[i] == 0) continue;
    i64 row = 0;
    for (int j = 0; j < ambient_rank_; ++j) row += gram_[i][j] * y[j];
    s += x[i] * row;
  }
  return s;
}

i64 RootDatum::center_order() const {
  if (semisimple_rank() != ambient_rank_)
    throw error("center_order: datum is not semisimple");
  // index of the root lattice in the character lattice:
  // |det(roots in char-lattice coordinates)| = |det R| / |det L|
  Mat roots_m, lattice_m;
  for (const auto& p : simple_) roots_m.push_back(p.root);
  lattice_m = char_lattice_;
  i64 dr = det_int(roots_m), dl = det_int(lattice_m);
  if (dl == 0 || dr % dl != 0) throw error("center_order: lattice data inconsistent");
  i64 idx = dr / dl;
  return idx < 0 ? -idx : idx;
}

RootPair highest_root(const RootDatum& rd) {
  if (!rd.irreducible()) throw error("highest_root: datum is reducible");
  const RootPair* best = nullptr;
  i64 best_height = 0;
  for (const auto& p : rd.roots()) {
    Vec c = rd.simple_coefficients(p.root);
    i64 h = std::accumulate(c.begin(), c.end(), i64(0));
    if (best == nullptr || h > best_height) {
      best = &p;
      best_height = h;
    }
  }
  if (!rd.dominant_weight(best->root))
    throw error("highest_root: internal error, maximal-height root not dominant");
  return *best;
}

Vec highest_root_coeffs(const RootDatum& rd) {
  return rd.simple_coefficients(highest_root(rd).root);
}

std::vector<KacNode> kac_order_p_nodes(const RootDatum& rd, i64 p) {
  if (!is_prime(p)) throw error("kac_order_p_nodes: order must be prime");
  Vec c = highest_root_coeffs(rd);
  std::vector<KacNode> nodes;
  const int k = rd.semisimple_rank();
  // beta_i: solve <alpha_j, beta_i> = delta_ij over Q; only defined for
  // semisimple full-rank data
  for (int i = 0; i < k; ++i) {
    if (c[i] != p) continue;
    Mat m(k, Vec(k));
    for (int row = 0; row < k; ++row)
      for (int col = 0; col < k; ++col) m[row][col] = rd.simple_pairs()[row].root[col];
    Vec b(k, 0);
    b[i] = 1;
    if (k != rd.ambient_rank())
      throw error("kac_order_p_nodes: datum must have full semisimple rank");
    auto [num, den] = solve_rational(m, b);
    KacNode node;
    node.index = i;
    node.order = c[i];
    node.beta_num = num;
    node.beta_den = den;
    nodes.push_back(std::move(node));
  }
  return nodes;
}

RootDatum centralizer_datum(const RootDatum& rd, const KacNode& node) {
  RootPair top = highest_root(rd);
  std::vector<RootPair> pairs;
  for (int j = 0; j < rd.semisimple_rank(); ++j)
    if (j != node.index) pairs.push_back(rd.simple_pairs()[j]);
  pairs.push_back(RootPair{negate(top.root), negate(top.coroot)});

  RootDatum zd = RootDatum::from_simple_pairs(
      rd.ambient_rank(), std::move(pairs), rd.isogeny(),
      rd.name() + "-centralizer-node" + std::to_string(node.index));

  // cross-validation: the subsystem of roots whose coefficient at the node
  // vanishes mod the node order must coincide with the reflection closure
  std::set<Vec> closure;
  for (const auto& p : zd.roots()) closure.insert(p.root);
  std::set<Vec> congruence;
  for (const auto& p : rd.roots()) {
    Vec c = rd.simple_coefficients(p.root);
    if (((c[node.index] % node.order) + node.order) % node.order == 0) congruence.insert(p.root);
  }
  if (closure != congruence)
    throw error("centralizer_datum: affine-diagram deletion and the congruence subsystem disagree");
  if (zd.semisimple_rank() != rd.semisimple_rank())
    throw error("centralizer_datum: rank changed");
  return zd;
}

RootDatum dual_datum(const RootDatum& rd) {
  RootDatum out;
  out.ambient_rank_ = rd.ambient_rank_;
  for (const auto& p : rd.simple_) out.simple_.push_back(RootPair{p.coroot, p.root});
  switch (rd.isogeny_) {
    case Isogeny::SimplyConnected:
      out.isogeny_ = Isogeny::Adjoint;
      break;
    case Isogeny::Adjoint:
      out.isogeny_ = Isogeny::SimplyConnected;
      break;
    default:
      out.isogeny_ = Isogeny::Sublattice;
  }
  out.name_ = rd.name_ + "-dual";
  out.char_lattice_.assign(out.ambient_rank_, Vec(out.ambient_rank_, 0));
  for (int i = 0; i < out.ambient_rank_; ++i) out.char_lattice_[i][i] = 1;
  out.close_roots();
  return out;
}

CorootCompatibilityReport verify_coroot_compatibility(const RootDatum& rd, const KacNode& node) {
  CorootCompatibilityReport report;
  auto complain = [&](const std::string& s) {
    report.passed = false;
    report.violations.push_back(s);
  };

  RootDatum zd = centralizer_datum(rd, node);
  RootDatum rd_dual = dual_datum(rd);
  RootDatum zd_dual = dual_datum(zd);

  // roots of Z sit inside roots of G with matching coroots
  std::set<RootPair> g_pairs(rd.roots().begin(), rd.roots().end());
  for (const auto& p : zd.roots())
    if (!g_pairs.count(p)) complain("centralizer pair not found among ambient pairs");

  // coroots of Z^vee inside coroots of G^vee through the same bijection
  std::set<RootPair> g_dual_pairs(rd_dual.roots().begin(), rd_dual.roots().end());
  for (const auto& p : zd_dual.roots())
    if (!g_dual_pairs.count(p)) complain("dual centralizer pair not found among dual ambient pairs");

  // Weyl generators: the reflection attached to a simple pair of Z equals the
  // reflection attached to the identical pair of G, and the dual-side matrix
  // is its transpose
  const int r = rd.ambient_rank();
  auto reflection_matrix = [&](const RootPair& p) {
    Mat m(r, Vec(r, 0));
    for (int col = 0; col < r; ++col) {
      Vec e(r, 0);
      e[col] = 1;
      Vec img = add(e, scale(p.root, -dot(e, p.coroot)));
      for (int row = 0; row < r; ++row) m[row][col] = img[row];
    }
    return m;
  };
  for (const auto& p : zd.simple_pairs()) {
    auto it = std::find_if(rd.roots().begin(), rd.roots().end(),
                           [&](const RootPair& q) { return q.root == p.root; });
    if (it == rd.roots().end()) {
      complain("simple pair of the centralizer is not a root of the ambient datum");
      continue;
    }
    if (it->coroot != p.coroot) {
      complain("coroot computed inside the centralizer differs from the ambient coroot");
      continue;
    }
    Mat weight_side = reflection_matrix(p);
    Mat ambient_side = reflection_matrix(*it);
    if (weight_side != ambient_side) complain("Weyl generator differs from the ambient reflection");
    // dual-side reflection is the transpose
    Mat dual_side = reflection_matrix(RootPair{p.coroot, p.root});
    Mat transpose(r, Vec(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) transpose[i][j] = weight_side[j][i];
    if (dual_side != transpose)
      complain("dual Weyl generator is not the transpose of the weight-side generator");
  }
  return report;
}

}  // namespace smith
