#include "smith/tate.hpp"

#include <algorithm>
#include <numeric>

namespace smith {

namespace {

PMat zero_matrix(i64 rows, i64 cols) { return PMat(rows, std::vector<i64>(cols, 0)); }

PMat identity(i64 n) {
  PMat m = zero_matrix(n, n);
  for (i64 i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

PMat mul(i64 p, const PMat& a, const PMat& b) {
  const i64 n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  PMat c = zero_matrix(n, m);
  for (i64 i = 0; i < n; ++i)
    for (i64 l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      i64 x = a[i][l];
      for (i64 j = 0; j < m; ++j) c[i][j] = (c[i][j] + x * b[l][j]) % p;
    }
  return c;
}

PMat add(i64 p, const PMat& a, const PMat& b) {
  PMat c = a;
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c[i].size(); ++j) c[i][j] = (c[i][j] + b[i][j]) % p;
  return c;
}

PMat scale(i64 p, const PMat& a, i64 t) {
  PMat c = a;
  t = ((t % p) + p) % p;
  for (auto& row : c)
    for (auto& x : row) x = (x * t) % p;
  return c;
}

i64 rank_mod(i64 p, PMat a) {
  if (a.empty() || a[0].empty()) return 0;
  const i64 rows = a.size(), cols = a[0].size();
  i64 rank = 0;
  for (i64 c = 0; c < cols && rank < rows; ++c) {
    i64 pivot = -1;
    for (i64 r = rank; r < rows; ++r)
      if (a[r][c] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    // normalize pivot to 1
    i64 v = ((a[rank][c] % p) + p) % p;
    i64 inv = 1;
    for (i64 x = 1; x < p; ++x)
      if ((v * x) % p == 1) {
        inv = x;
        break;
      }
    for (i64 cc = 0; cc < cols; ++cc) a[rank][cc] = ((a[rank][cc] * inv) % p + p) % p;
    for (i64 r = 0; r < rows; ++r) {
      if (r == rank) continue;
      i64 f = ((a[r][c] % p) + p) % p;
      if (f == 0) continue;
      for (i64 cc = 0; cc < cols; ++cc)
        a[r][cc] = ((a[r][cc] - f * a[rank][cc]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// direct sum placement helper for building block matrices
struct BlockMatrix {
  i64 rows = 0, cols = 0;
  PMat m;
  BlockMatrix(i64 r, i64 c) : rows(r), cols(c), m(zero_matrix(r, c)) {}
  void place(i64 r0, i64 c0, const PMat& blk, i64 sign, i64 p) {
    for (size_t i = 0; i < blk.size(); ++i)
      for (size_t j = 0; j < blk[i].size(); ++j)
        m[r0 + i][c0 + j] = (((m[r0 + i][c0 + j] + sign * blk[i][j]) % p) + p) % p;
  }
};

}  // namespace

TateComplex::TateComplex(i64 p, std::map<int, Degree> degrees, std::map<int, PMat> differentials)
    : p_(p), degrees_(std::move(degrees)), differentials_(std::move(differentials)) {
  if (!is_prime(p_)) throw error("TateComplex: p must be prime");
  // normalize entries, drop zero-dimensional degrees
  for (auto it = degrees_.begin(); it != degrees_.end();) {
    if (it->second.dim == 0) {
      it = degrees_.erase(it);
      continue;
    }
    Degree& d = it->second;
    if (static_cast<i64>(d.action.size()) != d.dim)
      throw error("TateComplex: action matrix shape mismatch");
    for (auto& row : d.action) {
      if (static_cast<i64>(row.size()) != d.dim)
        throw error("TateComplex: action matrix shape mismatch");
      for (auto& x : row) x = ((x % p_) + p_) % p_;
    }
    ++it;
  }
  for (auto it = differentials_.begin(); it != differentials_.end();) {
    const int k = it->first;
    if (dim(k) == 0 || dim(k + 1) == 0) {
      it = differentials_.erase(it);
      continue;
    }
    PMat& d = it->second;
    if (static_cast<i64>(d.size()) != dim(k + 1))
      throw error("TateComplex: differential shape mismatch at degree " + std::to_string(k));
    for (auto& row : d) {
      if (static_cast<i64>(row.size()) != dim(k))
        throw error("TateComplex: differential shape mismatch at degree " + std::to_string(k));
      for (auto& x : row) x = ((x % p_) + p_) % p_;
    }
    ++it;
  }
  // action order p
  for (const auto& [k, d] : degrees_) {
    PMat pow = identity(d.dim);
    for (i64 i = 0; i < p_; ++i) pow = mul(p_, d.action, pow);
    if (pow != identity(d.dim))
      throw error("TateComplex: action does not have order dividing p at degree " +
                  std::to_string(k));
  }
  // d^2 = 0 and equivariance
  for (const auto& [k, d] : differentials_) {
    if (dim(k + 2) > 0 && differentials_.count(k + 1)) {
      PMat dd = mul(p_, differentials_.at(k + 1), d);
      for (const auto& row : dd)
        for (i64 x : row)
          if (x % p_ != 0) throw error("TateComplex: d^2 != 0 at degree " + std::to_string(k));
    }
    PMat lhs = mul(p_, d, degrees_.at(k).action);
    PMat rhs = mul(p_, degrees_.at(k + 1).action, d);
    if (lhs != rhs)
      throw error("TateComplex: differential is not equivariant at degree " + std::to_string(k));
  }
}

const PMat& TateComplex::action(int k) const {
  auto it = degrees_.find(k);
  if (it == degrees_.end()) throw error("TateComplex: no module at degree " + std::to_string(k));
  return it->second.action;
}

PMat TateComplex::differential(int k) const {
  auto it = differentials_.find(k);
  if (it != differentials_.end()) return it->second;
  return zero_matrix(dim(k + 1), dim(k));
}

int TateComplex::min_degree() const {
  return degrees_.empty() ? 0 : degrees_.begin()->first;
}

int TateComplex::max_degree() const {
  return degrees_.empty() ? 0 : degrees_.rbegin()->first;
}

TateComplex TateComplex::shifted(int s) const {
  std::map<int, Degree> degs;
  std::map<int, PMat> diffs;
  for (const auto& [k, d] : degrees_) degs[k - s] = d;
  for (const auto& [k, d] : differentials_) {
    diffs[k - s] = (s % 2 == 0) ? d : scale(p_, d, -1);
  }
  return TateComplex(p_, std::move(degs), std::move(diffs));
}

i64 chi_mod_p(const TateComplex& m) {
  i64 chi = 0;
  for (const auto& [k, d] : m.degrees()) chi += (k % 2 == 0) ? d.dim : -d.dim;
  return ((chi % m.p()) + m.p()) % m.p();
}

namespace {

// Total complex of the 2-periodic Tate direction against the module
// direction; cohomology dimensions per total degree in [lo, hi].
std::map<int, i64> tate_window(const TateComplex& m, int lo, int hi) {
  const i64 p = m.p();
  if (m.degrees().empty()) {
    std::map<int, i64> out;
    for (int n = lo; n <= hi; ++n) out[n] = 0;
    return out;
  }
  const int jlo = m.min_degree(), jhi = m.max_degree();
  const int amp = jhi - jlo + 1;
  const int ilo = lo - jhi - amp - 4, ihi = hi - jlo + amp + 4;

  // slot (i, j): copy of M^j at Tate position i; φ_i = (1−g) for even i,
  // N = 1 + g + ... + g^{p−1} for odd i
  auto phi = [&](int i, int j) {
    const PMat& g = m.action(j);
    const i64 d = m.dim(j);
    if ((((i % 2) + 2) % 2) == 0) {
      PMat out = identity(d);
      return add(p, out, scale(p, g, -1));  // 1 − g
    }
    PMat out = zero_matrix(d, d);  // norm 1 + g + ... + g^{p−1}
    PMat pow = identity(d);
    for (i64 k = 0; k < p; ++k) {
      out = add(p, out, pow);
      pow = mul(p, g, pow);
    }
    return out;
  };

  // assemble total differentials; T^n = ⊕_{i+j=n} slot(i,j)
  auto slots = [&](int n) {
    std::vector<std::pair<int, int>> out;  // (i, j)
    for (int j = jlo; j <= jhi; ++j) {
      int i = n - j;
      if (i >= ilo && i <= ihi && m.dim(j) > 0) out.push_back({i, j});
    }
    return out;
  };
  auto total_dim = [&](int n) {
    i64 d = 0;
    for (auto [i, j] : slots(n)) {
      (void)i;
      d += m.dim(j);
    }
    return d;
  };
  auto total_diff = [&](int n) {
    auto src = slots(n), dst = slots(n + 1);
    BlockMatrix out(total_dim(n + 1), total_dim(n));
    std::map<std::pair<int, int>, i64> dst_offset;
    i64 off = 0;
    for (auto s : dst) {
      dst_offset[s] = off;
      off += m.dim(s.second);
    }
    i64 col = 0;
    for (auto [i, j] : src) {
      // horizontal: (i, j) -> (i+1, j) via φ_i
      auto h = dst_offset.find({i + 1, j});
      if (h != dst_offset.end()) out.place(h->second, col, phi(i, j), 1, p);
      // vertical: (i, j) -> (i, j+1) via (−1)^i d
      auto v = dst_offset.find({i, j + 1});
      if (v != dst_offset.end())
        out.place(v->second, col, m.differential(j), (((i % 2) + 2) % 2 == 0) ? 1 : -1, p);
      col += m.dim(j);
    }
    return out.m;
  };

  std::map<int, i64> out;
  for (int n = lo; n <= hi; ++n) {
    i64 d = total_dim(n);
    i64 r_out = rank_mod(p, total_diff(n));
    i64 r_in = rank_mod(p, total_diff(n - 1));
    out[n] = d - r_out - r_in;
  }
  return out;
}

}  // namespace

std::map<int, i64> tate_cohomology(const TateComplex& m) {
  if (m.degrees().empty()) return {{0, 0}};
  return tate_window(m, m.min_degree() - 2, m.max_degree() + 2);
}

bool is_perfect(const TateComplex& m) {
  for (const auto& [n, d] : tate_cohomology(m))
    if (d != 0) return false;
  return true;
}

std::map<int, i64> cohomology(const TateComplex& m) {
  std::map<int, i64> out;
  if (m.degrees().empty()) return out;
  for (int n = m.min_degree(); n <= m.max_degree(); ++n) {
    i64 d = m.dim(n);
    i64 r_out = rank_mod(m.p(), m.differential(n));
    i64 r_in = rank_mod(m.p(), m.differential(n - 1));
    out[n] = d - r_out - r_in;
  }
  return out;
}

bool is_acyclic(const TateComplex& m) {
  for (const auto& [n, d] : cohomology(m))
    if (d != 0) return false;
  return true;
}

TateComplex tensor(const TateComplex& a, const TateComplex& b) {
  if (a.p() != b.p()) throw error("tensor: different primes");
  const i64 p = a.p();
  // block layout per degree n: pairs (i, j = n − i) ordered by i
  auto blocks = [&](int n) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [i, d] : a.degrees()) {
      (void)d;
      if (b.dim(n - i) > 0) out.push_back({i, n - i});
    }
    return out;
  };
  std::map<int, Degree> degs;
  std::map<int, PMat> diffs;
  int lo = a.min_degree() + b.min_degree();
  int hi = a.max_degree() + b.max_degree();
  auto kron = [&](const PMat& x, const PMat& y) {
    const i64 rx = x.size(), cx = rx ? x[0].size() : 0;
    const i64 ry = y.size(), cy = ry ? y[0].size() : 0;
    PMat out = zero_matrix(rx * ry, cx * cy);
    for (i64 i = 0; i < rx; ++i)
      for (i64 j = 0; j < cx; ++j) {
        if (x[i][j] == 0) continue;
        for (i64 k = 0; k < ry; ++k)
          for (i64 l = 0; l < cy; ++l)
            out[i * ry + k][j * cy + l] = (x[i][j] * y[k][l]) % p;
      }
    return out;
  };
  for (int n = lo; n <= hi; ++n) {
    auto blk = blocks(n);
    i64 total = 0;
    for (auto [i, j] : blk) total += a.dim(i) * b.dim(j);
    if (total == 0) continue;
    Degree deg;
    deg.dim = total;
    BlockMatrix act(total, total);
    i64 off = 0;
    for (auto [i, j] : blk) {
      act.place(off, off, kron(a.action(i), b.action(j)), 1, p);
      off += a.dim(i) * b.dim(j);
    }
    deg.action = act.m;
    degs[n] = std::move(deg);
  }
  for (int n = lo; n < hi; ++n) {
    if (!degs.count(n) || !degs.count(n + 1)) continue;
    auto src = blocks(n), dst = blocks(n + 1);
    std::map<std::pair<int, int>, i64> dst_off;
    i64 off = 0;
    for (auto s : dst) {
      dst_off[s] = off;
      off += a.dim(s.first) * b.dim(s.second);
    }
    BlockMatrix d(degs[n + 1].dim, degs[n].dim);
    i64 col = 0;
    for (auto [i, j] : src) {
      auto ha = dst_off.find({i + 1, j});
      if (ha != dst_off.end()) d.place(ha->second, col, kron(a.differential(i), identity(b.dim(j))), 1, p);
      auto hb = dst_off.find({i, j + 1});
      if (hb != dst_off.end())
        d.place(hb->second, col, kron(identity(a.dim(i)), b.differential(j)),
                ((((i % 2) + 2) % 2) == 0) ? 1 : -1, p);
      col += a.dim(i) * b.dim(j);
    }
    diffs[n] = d.m;
  }
  return TateComplex(p, std::move(degs), std::move(diffs));
}

TateComplex direct_sum(const TateComplex& a, const TateComplex& b) {
  if (a.p() != b.p()) throw error("direct_sum: different primes");
  const i64 p = a.p();
  std::map<int, Degree> degs;
  std::map<int, PMat> diffs;
  int lo = std::min(a.min_degree(), b.min_degree());
  int hi = std::max(a.max_degree(), b.max_degree());
  for (int n = lo; n <= hi; ++n) {
    i64 d = a.dim(n) + b.dim(n);
    if (d == 0) continue;
    Degree deg;
    deg.dim = d;
    BlockMatrix act(d, d);
    if (a.dim(n)) act.place(0, 0, a.action(n), 1, p);
    if (b.dim(n)) act.place(a.dim(n), a.dim(n), b.action(n), 1, p);
    deg.action = act.m;
    degs[n] = std::move(deg);
  }
  for (int n = lo; n < hi; ++n) {
    i64 rows = a.dim(n + 1) + b.dim(n + 1), cols = a.dim(n) + b.dim(n);
    if (rows == 0 || cols == 0) continue;
    BlockMatrix d(rows, cols);
    if (a.dim(n + 1) && a.dim(n)) d.place(0, 0, a.differential(n), 1, p);
    if (b.dim(n + 1) && b.dim(n)) d.place(a.dim(n + 1), a.dim(n), b.differential(n), 1, p);
    diffs[n] = d.m;
  }
  return TateComplex(p, std::move(degs), std::move(diffs));
}

TateComplex dual(const TateComplex& m) {
  const i64 p = m.p();
  std::map<int, Degree> degs;
  std::map<int, PMat> diffs;
  auto transpose = [](const PMat& a) {
    const i64 r = a.size(), c = r ? a[0].size() : 0;
    PMat out(c, std::vector<i64>(r));
    for (i64 i = 0; i < r; ++i)
      for (i64 j = 0; j < c; ++j) out[j][i] = a[i][j];
    return out;
  };
  for (const auto& [k, d] : m.degrees()) {
    Degree out;
    out.dim = d.dim;
    // contragredient: (g^{-1})^T = (g^{p-1})^T
    PMat inv = identity(d.dim);
    for (i64 i = 0; i + 1 < p; ++i) inv = mul(p, d.action, inv);
    out.action = transpose(inv);
    degs[-k] = std::move(out);
  }
  for (int k = m.min_degree(); k < m.max_degree(); ++k) {
    if (m.dim(k) == 0 || m.dim(k + 1) == 0) continue;
    PMat d = m.differential(k);
    // (M^*)^{-k-1} -> (M^*)^{-k} is the transpose
    diffs[-k - 1] = transpose(d);
  }
  return TateComplex(p, std::move(degs), std::move(diffs));
}

bool is_chain_map(const ChainMap& f) {
  const TateComplex& a = *f.source;
  const TateComplex& b = *f.target;
  if (a.p() != b.p()) return false;
  const i64 p = a.p();
  for (const auto& [k, comp] : f.components) {
    if (static_cast<i64>(comp.size()) != b.dim(k)) return false;
    if (b.dim(k) > 0 && a.dim(k) > 0 && static_cast<i64>(comp[0].size()) != a.dim(k)) return false;
    // equivariance
    if (a.dim(k) > 0 && b.dim(k) > 0) {
      if (mul(p, comp, a.action(k)) != mul(p, b.action(k), comp)) return false;
    }
  }
  auto component = [&](int k) {
    auto it = f.components.find(k);
    if (it != f.components.end()) return it->second;
    return zero_matrix(b.dim(k), a.dim(k));
  };
  int lo = std::min(a.min_degree(), b.min_degree());
  int hi = std::max(a.max_degree(), b.max_degree());
  for (int k = lo; k <= hi; ++k) {
    // both sides have shape b.dim(k+1) × a.dim(k); missing modules mean zero
    PMat lhs = zero_matrix(b.dim(k + 1), a.dim(k));
    if (a.dim(k) > 0 && a.dim(k + 1) > 0 && b.dim(k + 1) > 0)
      lhs = mul(p, component(k + 1), a.differential(k));
    PMat rhs = zero_matrix(b.dim(k + 1), a.dim(k));
    if (a.dim(k) > 0 && b.dim(k) > 0 && b.dim(k + 1) > 0)
      rhs = mul(p, b.differential(k), component(k));
    if (lhs != rhs) return false;
  }
  return true;
}

TateComplex cone(const ChainMap& f) {
  if (!is_chain_map(f)) throw error("cone: not a chain map");
  const TateComplex& a = *f.source;
  const TateComplex& b = *f.target;
  const i64 p = a.p();
  auto component = [&](int k) {
    auto it = f.components.find(k);
    if (it != f.components.end()) return it->second;
    return zero_matrix(b.dim(k), a.dim(k));
  };
  // C^n = A^{n+1} ⊕ B^n, d(x, y) = (−d_A x, f(x) + d_B y)
  std::map<int, Degree> degs;
  std::map<int, PMat> diffs;
  int lo = std::min(a.min_degree() - 1, b.min_degree());
  int hi = std::max(a.max_degree() - 1, b.max_degree());
  for (int n = lo; n <= hi; ++n) {
    i64 d = a.dim(n + 1) + b.dim(n);
    if (d == 0) continue;
    Degree deg;
    deg.dim = d;
    BlockMatrix act(d, d);
    if (a.dim(n + 1)) act.place(0, 0, a.action(n + 1), 1, p);
    if (b.dim(n)) act.place(a.dim(n + 1), a.dim(n + 1), b.action(n), 1, p);
    deg.action = act.m;
    degs[n] = std::move(deg);
  }
  for (int n = lo; n < hi; ++n) {
    i64 rows = a.dim(n + 2) + b.dim(n + 1);
    i64 cols = a.dim(n + 1) + b.dim(n);
    if (rows == 0 || cols == 0) continue;
    BlockMatrix d(rows, cols);
    if (a.dim(n + 2) && a.dim(n + 1)) d.place(0, 0, a.differential(n + 1), -1, p);
    if (b.dim(n + 1) && a.dim(n + 1)) d.place(a.dim(n + 2), 0, component(n + 1), 1, p);
    if (b.dim(n + 1) && b.dim(n)) d.place(a.dim(n + 2), a.dim(n + 1), b.differential(n), 1, p);
    diffs[n] = d.m;
  }
  return TateComplex(p, std::move(degs), std::move(diffs));
}

TateComplex trivial_module(i64 p, int degree, i64 dim) {
  std::map<int, Degree> degs;
  degs[degree] = Degree{dim, identity(dim)};
  return TateComplex(p, std::move(degs), {});
}

TateComplex free_module(i64 p, int degree, i64 rank) {
  // block shift of p copies per generator
  i64 d = p * rank;
  PMat action = zero_matrix(d, d);
  for (i64 r = 0; r < rank; ++r)
    for (i64 k = 0; k < p; ++k) action[r * p + (k + 1) % p][r * p + k] = 1;
  std::map<int, Degree> degs;
  degs[degree] = Degree{d, std::move(action)};
  return TateComplex(p, std::move(degs), {});
}

namespace {

// The untwisted free cover B: p blocks of M per degree, action = block
// shift; with the equivariant maps of the norm/augmentation sequence:
//   ε: M → B,  ε(m)_k = g^{-k} m
//   τ: B → B,  τ(m)_k = m_k − g^{-1} m_{k−1}
//   μ: B → M,  μ(m_*) = Σ_k g^k m_k
struct FreeCover {
  TateComplex b;
  std::map<int, PMat> eps, tau, mu;
};

FreeCover make_free_cover(const TateComplex& m) {
  const i64 p = m.p();
  std::map<int, Degree> degs;
  std::map<int, PMat> diffs;
  for (const auto& [j, d] : m.degrees()) {
    Degree deg;
    deg.dim = p * d.dim;
    BlockMatrix act(deg.dim, deg.dim);
    for (i64 k = 0; k < p; ++k) act.place(((k + 1) % p) * d.dim, k * d.dim, identity(d.dim), 1, p);
    deg.action = act.m;
    degs[j] = std::move(deg);
  }
  for (int j = m.min_degree(); j < m.max_degree(); ++j) {
    if (m.dim(j) == 0 || m.dim(j + 1) == 0) continue;
    BlockMatrix d(p * m.dim(j + 1), p * m.dim(j));
    for (i64 k = 0; k < p; ++k) d.place(k * m.dim(j + 1), k * m.dim(j), m.differential(j), 1, p);
    diffs[j] = d.m;
  }
  FreeCover out{TateComplex(p, std::move(degs), std::move(diffs)), {}, {}, {}};
  for (const auto& [j, d] : m.degrees()) {
    // inverse action g^{-1} = g^{p-1}
    PMat ginv = identity(d.dim);
    for (i64 i = 0; i + 1 < p; ++i) ginv = mul(p, d.action, ginv);
    // ε
    BlockMatrix eps(p * d.dim, d.dim);
    PMat pw = identity(d.dim);
    for (i64 k = 0; k < p; ++k) {
      eps.place(k * d.dim, 0, pw, 1, p);
      pw = mul(p, ginv, pw);
    }
    out.eps[j] = eps.m;
    // τ
    BlockMatrix tau(p * d.dim, p * d.dim);
    for (i64 k = 0; k < p; ++k) {
      tau.place(k * d.dim, k * d.dim, identity(d.dim), 1, p);
      tau.place(k * d.dim, ((k - 1 + p) % p) * d.dim, ginv, -1, p);
    }
    out.tau[j] = tau.m;
    // μ
    BlockMatrix mu(d.dim, p * d.dim);
    pw = identity(d.dim);
    for (i64 k = 0; k < p; ++k) {
      mu.place(0, k * d.dim, pw, 1, p);
      pw = mul(p, d.action, pw);
    }
    out.mu[j] = mu.m;
  }
  return out;
}

}  // namespace

PeriodicityWitness periodicity_witness(const TateComplex& m, int shift) {
  const i64 p = m.p();
  if (shift != 2 && !(shift == 1 && p == 2))
    throw error("periodicity_witness: shift must be 2, or 1 when p = 2");
  if (m.degrees().empty()) throw error("periodicity_witness: empty complex");
  FreeCover cover = make_free_cover(m);
  const TateComplex& B = cover.b;

  // F = the free complex of the sequence: two-term Tot(B → B) for shift 2,
  // B itself for shift 1; ι: M[shift] → F, π: F → M[shift − 1]
  TateComplex F = B;  // placeholder, replaced below
  std::map<int, PMat> iota, pi;
  if (shift == 2) {
    // F^n = B^{n+2} ⊕ B^{n+1}, d(x,y) = (d x, τ x − d y)
    std::map<int, Degree> degs;
    std::map<int, PMat> diffs;
    int lo = B.min_degree() - 2, hi = B.max_degree() - 1;
    for (int n = lo; n <= hi; ++n) {
      i64 d = B.dim(n + 2) + B.dim(n + 1);
      if (d == 0) continue;
      Degree deg;
      deg.dim = d;
      BlockMatrix act(d, d);
      if (B.dim(n + 2)) act.place(0, 0, B.action(n + 2), 1, p);
      if (B.dim(n + 1)) act.place(B.dim(n + 2), B.dim(n + 2), B.action(n + 1), 1, p);
      deg.action = act.m;
      degs[n] = std::move(deg);
    }
    for (int n = lo; n < hi; ++n) {
      i64 rows = B.dim(n + 3) + B.dim(n + 2);
      i64 cols = B.dim(n + 2) + B.dim(n + 1);
      if (rows == 0 || cols == 0) continue;
      BlockMatrix d(rows, cols);
      if (B.dim(n + 3) && B.dim(n + 2)) d.place(0, 0, B.differential(n + 2), 1, p);
      if (B.dim(n + 2)) d.place(B.dim(n + 3), 0, cover.tau.at(n + 2), 1, p);
      if (B.dim(n + 2) && B.dim(n + 1)) d.place(B.dim(n + 3), cols - B.dim(n + 1), B.differential(n + 1), -1, p);
      diffs[n] = d.m;
    }
    F = TateComplex(p, std::move(degs), std::move(diffs));
    // ι: M[2]^n = M^{n+2} → F^n: x ↦ (ε x, 0)
    for (const auto& [j, d] : m.degrees()) {
      (void)d;
      int n = j - 2;
      BlockMatrix comp(F.dim(n), m.dim(j));
      if (F.dim(n)) comp.place(0, 0, cover.eps.at(j), 1, p);
      iota[n] = comp.m;
    }
    // π: F^n → M[1]^n = M^{n+1}: (x, y) ↦ μ(y)
    for (const auto& [j, d] : m.degrees()) {
      (void)d;
      int n = j - 1;
      BlockMatrix comp(m.dim(j), F.dim(n));
      comp.place(0, B.dim(n + 2), cover.mu.at(j), 1, p);
      pi[n] = comp.m;
    }
  } else {
    F = B;
    // ι: M[1]^n = M^{n+1} → B^n -- wait, the short sequence is
    // 0 → M → B → M → 0, so ι: M → B in the same degree and π: B → M.
    for (const auto& [j, d] : m.degrees()) {
      (void)d;
      iota[j] = cover.eps.at(j);
      pi[j] = cover.mu.at(j);
    }
  }

  // R = cone(ι)[shift == 2 ? −1 : 0]; for both cases build V = cone(ι) and
  // read q and φ off the cone components.
  TateComplex shifted_src = (shift == 2) ? m.shifted(2) : m;
  ChainMap iota_map{&shifted_src, &F, iota};
  if (!is_chain_map(iota_map)) throw error("periodicity_witness: ι is not a chain map (internal)");
  TateComplex V = cone(iota_map);

  // q̃: V → M[shift−1]: (a, w) ↦ π(w); φ̃: V → M[shift][1]: (a, w) ↦ −a
  TateComplex target_q = (shift == 2) ? m.shifted(1) : m;  // M[shift−1]
  TateComplex target_phi = shifted_src.shifted(1);         // M[shift][1]
  std::map<int, PMat> qt, ft;
  for (int n = V.min_degree(); n <= V.max_degree(); ++n) {
    i64 adim = shifted_src.dim(n + 1);
    BlockMatrix qb(target_q.dim(n), V.dim(n));
    auto it = pi.find(n);
    if (it != pi.end() && target_q.dim(n) > 0) qb.place(0, adim, it->second, 1, p);
    qt[n] = qb.m;
    BlockMatrix fb(target_phi.dim(n), V.dim(n));
    if (target_phi.dim(n) > 0 && adim > 0) fb.place(0, 0, identity(adim), -1, p);
    ft[n] = fb.m;
  }
  ChainMap q_map{&V, &target_q, qt};
  ChainMap f_map{&V, &target_phi, ft};
  if (!is_chain_map(q_map)) throw error("periodicity_witness: q is not a chain map (internal)");
  if (!is_chain_map(f_map)) throw error("periodicity_witness: φ is not a chain map (internal)");
  if (!is_acyclic(cone(q_map)))
    throw error("periodicity_witness: roof is not quasi-isomorphic to the input (internal)");
  TateComplex witness_cone = cone(f_map);
  if (!is_perfect(witness_cone))
    throw error("periodicity_witness: witness cone is not perfect (internal)");

  // shift everything down once for the shift-2 case so the roof maps to
  // M and M[2] on the nose
  PeriodicityWitness out{shift,
                         (shift == 2) ? V.shifted(-1) : V,
                         (shift == 2) ? m.shifted(2) : m.shifted(1),
                         {},
                         {},
                         witness_cone};
  if (shift == 2) {
    for (auto& [n, mat] : qt) out.to_input[n + 1] = mat;
    for (auto& [n, mat] : ft) out.to_shifted[n + 1] = mat;
  } else {
    out.to_input = qt;
    out.to_shifted = ft;
  }
  return out;
}

TateComplex equivariant_cochains(const GComplex& g) {
  if (!g.regular()) throw error("equivariant_cochains: action is not regular");
  if (!is_prime(g.order()))
    throw error("equivariant_cochains: group order must be prime (take the p-subgroup)");
  const i64 p = g.order();
  const Complex& c = *g.base();
  const int top = c.dim();
  // simplices per dimension, in complex order
  std::vector<std::vector<int>> by_dim(top + 1);
  std::vector<int> position(c.size());
  for (int id = 0; id < c.size(); ++id) {
    position[id] = static_cast<int>(by_dim[c.dim(id)].size());
    by_dim[c.dim(id)].push_back(id);
  }
  // chain action with orientation signs: g[σ] = sign(g|σ)·[gσ]
  auto chain_action = [&](int k, i64 power) {
    const auto& list = by_dim[k];
    PMat mat(list.size(), std::vector<i64>(list.size(), 0));
    for (size_t idx = 0; idx < list.size(); ++idx) {
      int id = list[idx];
      const Simplex& s = c.simplex(id);
      std::vector<int> image;
      for (int v : s) image.push_back(g.vertex_image(v, power));
      // parity of the sort
      i64 sign = 1;
      for (size_t i = 0; i < image.size(); ++i)
        for (size_t j = i + 1; j < image.size(); ++j)
          if (image[i] > image[j]) sign = -sign;
      Simplex sorted = image;
      std::sort(sorted.begin(), sorted.end());
      int img_id = c.require(sorted);
      mat[position[img_id]][idx] = ((sign % p) + p) % p;
    }
    return mat;
  };

  std::map<int, Degree> degs;
  std::map<int, PMat> diffs;
  for (int k = 0; k <= top; ++k) {
    if (by_dim[k].empty()) continue;
    Degree deg;
    deg.dim = static_cast<i64>(by_dim[k].size());
    // cochain action = transpose of the chain action of g^{-1}
    PMat inv = chain_action(k, g.order() - 1);
    PMat t(inv.size(), std::vector<i64>(inv.size()));
    for (size_t i = 0; i < inv.size(); ++i)
      for (size_t j = 0; j < inv.size(); ++j) t[j][i] = inv[i][j];
    deg.action = std::move(t);
    degs[k] = std::move(deg);
  }
  for (int k = 0; k + 1 <= top; ++k) {
    if (by_dim[k].empty() || by_dim[k + 1].empty()) continue;
    // coboundary = transpose of the boundary C_{k+1} -> C_k
    PMat d(by_dim[k + 1].size(), std::vector<i64>(by_dim[k].size(), 0));
    for (size_t tdx = 0; tdx < by_dim[k + 1].size(); ++tdx) {
      int tid = by_dim[k + 1][tdx];
      const Simplex& s = c.simplex(tid);
      for (size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        for (size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        int fid = c.require(face);
        i64 sign = (drop % 2 == 0) ? 1 : p - 1;
        d[tdx][position[fid]] = sign;
      }
    }
    diffs[k] = std::move(d);
  }
  return TateComplex(p, std::move(degs), std::move(diffs));
}

LinkVerdict link_cone_perfection(const GComplex& g, const std::string& vertex) {
  const Complex& c = *g.base();
  int v = c.vertex_id(vertex);
  if (v < 0) throw error("link_cone_perfection: unknown vertex " + vertex);
  if (g.vertex_image(v) != v) throw error("link_cone_perfection: vertex is not fixed");
  if (!g.regular()) throw error("link_cone_perfection: action is not regular");

  // link of v: simplices disjoint from v whose join with v is a simplex
  std::vector<bool> keep(c.size(), false);
  for (int id = 0; id < c.size(); ++id) {
    const Simplex& s = c.simplex(id);
    if (std::find(s.begin(), s.end(), v) != s.end()) continue;
    Simplex join = s;
    join.push_back(v);
    std::sort(join.begin(), join.end());
    if (c.find(join) >= 0) keep[id] = true;
  }
  Subcomplex link = induced_subcomplex(g.base(), keep);
  if (link.complex->size() == 0) return LinkVerdict::NotApplicable;

  // the link must avoid the fixed subcomplex for the free-action certificate
  for (int id = 0; id < link.complex->size(); ++id) {
    int parent = link.simplex_to_parent[id];
    bool fixed = true;
    for (int w : c.simplex(parent)) fixed = fixed && g.vertex_image(w) == w;
    if (fixed) return LinkVerdict::NotApplicable;
  }
  // induced action on the link
  std::vector<int> gen(link.complex->vertex_count());
  for (int w = 0; w < link.complex->vertex_count(); ++w) {
    int parent = link.vertex_to_parent[w];
    int image = g.vertex_image(parent);
    auto it = std::find(link.vertex_to_parent.begin(), link.vertex_to_parent.end(), image);
    if (it == link.vertex_to_parent.end())
      throw error("link_cone_perfection: link is not stable under the action (internal)");
    gen[w] = static_cast<int>(it - link.vertex_to_parent.begin());
  }
  GComplex link_action(link.complex, gen, g.order());
  return is_perfect(equivariant_cochains(link_action)) ? LinkVerdict::Perfect
                                                       : LinkVerdict::NotPerfect;
}

}  // namespace smith
