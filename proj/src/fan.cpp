#include "smith/fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace smith {

namespace {

int sign_pow(int d) { return (d & 1) ? -1 : 1; }

int sign_of(i64 x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

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

// exact rank of a small integer matrix via fraction-free elimination
int rank_int(std::vector<Vec> rows, int cols) {
  int rank = 0;
  for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] == 0) continue;
      i64 a = rows[rank][col], b = rows[r][col];
      i64 g = gcd64(a, b);
      i64 ma = b / g, mb = a / g;
      for (int c = 0; c < cols; ++c) rows[r][c] = rows[r][c] * mb - rows[rank][c] * ma;
      // keep entries small
      i64 rg = 0;
      for (int c = 0; c < cols; ++c) rg = gcd64(rg, rows[r][c]);
      if (rg > 1)
        for (int c = 0; c < cols; ++c) rows[r][c] /= rg;
    }
    ++rank;
  }
  return rank;
}

Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; });
}

Vec canonical_sign(Vec v) {
  for (i64 x : v) {
    if (x > 0) return v;
    if (x < 0) {
      for (auto& y : v) y = -y;
      return v;
    }
  }
  return v;
}

}  // namespace

i64 dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw error("dot: dimension mismatch");
  i64 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec primitive(Vec v) {
  i64 g = 0;
  for (i64 x : v) g = gcd64(g, x);
  if (g == 0) throw error("primitive: zero vector");
  for (auto& x : v) x /= g;
  return v;
}

int Cone::dim(int ambient) const {
  if (rays.empty()) return 0;
  return rank_int(rays, ambient);
}

std::string Cone::key() const {
  std::string out;
  for (size_t r = 0; r < rays.size(); ++r) {
    if (r) out += ';';
    for (size_t i = 0; i < rays[r].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(rays[r][i]);
    }
  }
  return out;
}

Fan::Fan(int ambient_dim, std::vector<Cone> cones) : dim_(ambient_dim), cones_(std::move(cones)) {
  if (dim_ < 1 || dim_ > 3)
    throw error("fan: only ambient dimensions 1..3 are supported");
  for (auto& c : cones_) {
    for (auto& r : c.rays) {
      if (static_cast<int>(r.size()) != dim_) throw error("fan: ray dimension mismatch");
      if (is_zero(r)) throw error("fan: zero ray");
    }
    std::sort(c.rays.begin(), c.rays.end());
  }
  std::sort(cones_.begin(), cones_.end(),
            [](const Cone& a, const Cone& b) { return a.rays < b.rays; });
  for (size_t i = 1; i < cones_.size(); ++i)
    if (cones_[i].rays == cones_[i - 1].rays) throw error("fan: duplicate cone");
}

int Fan::find(const Cone& c) const {
  Cone probe = c;
  std::sort(probe.rays.begin(), probe.rays.end());
  for (int i = 0; i < size(); ++i)
    if (cones_[i].rays == probe.rays) return i;
  return -1;
}

void Fan::validate() const {
  bool has_origin = false;
  i64 euler = 0;
  for (const auto& c : cones_) {
    if (c.rays.empty()) has_origin = true;
    euler += sign_pow(c.dim(dim_));
  }
  if (!has_origin) throw error("fan: missing origin cone");
  if (euler != sign_pow(dim_))
    throw error("fan: Euler completeness check failed (sum " + std::to_string(euler) + ")");
}

Fan Fan::from_arrangement(int ambient_dim, const std::vector<Vec>& covectors) {
  const int n = ambient_dim;
  if (n < 1 || n > 3) throw error("fan: only ambient dimensions 1..3 are supported");
  // normalize walls: primitive, canonical sign, dedupe
  std::set<Vec> wallset;
  for (const auto& h : covectors) {
    if (static_cast<int>(h.size()) != n) throw error("fan: covector dimension mismatch");
    if (is_zero(h)) continue;
    wallset.insert(canonical_sign(primitive(h)));
  }
  std::vector<Vec> walls(wallset.begin(), wallset.end());
  const int m = static_cast<int>(walls.size());
  if (rank_int(walls, n) != n)
    throw error("fan: arrangement must be essential (covectors must span the dual space)");
  if (m > 8) throw error("fan: arrangement too large (" + std::to_string(m) + " hyperplanes)");

  // candidate rays: kernel directions of (n-1)-fold wall intersections
  std::set<Vec> candset;
  if (n == 1) {
    candset.insert({1});
    candset.insert({-1});
  } else if (n == 2) {
    for (const auto& h : walls) {
      Vec d = primitive({-h[1], h[0]});
      candset.insert(d);
      candset.insert({-d[0], -d[1]});
    }
  } else {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        Vec d = cross(walls[i], walls[j]);
        if (is_zero(d)) continue;
        d = primitive(d);
        candset.insert(d);
        candset.insert({-d[0], -d[1], -d[2]});
      }
  }
  std::vector<Vec> cands(candset.begin(), candset.end());
  std::vector<std::vector<int>> cand_sign(cands.size(), std::vector<int>(m));
  for (size_t c = 0; c < cands.size(); ++c)
    for (int i = 0; i < m; ++i) cand_sign[c][i] = sign_of(dot(walls[i], cands[c]));

  std::vector<Cone> cones;
  std::vector<int> s(m, -1);  // sign vector in {-1,0,1}
  i64 total = 1;
  for (int i = 0; i < m; ++i) total *= 3;
  for (i64 code = 0; code < total; ++code) {
    i64 x = code;
    for (int i = 0; i < m; ++i) {
      s[i] = static_cast<int>(x % 3) - 1;
      x /= 3;
    }
    // compatible candidates
    Cone cone;
    Vec sum(n, 0);
    for (size_t c = 0; c < cands.size(); ++c) {
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        int cs = cand_sign[c][i];
        ok = (s[i] == 0) ? (cs == 0) : (cs == 0 || cs == s[i]);
      }
      if (ok) {
        cone.rays.push_back(cands[c]);
        for (int k = 0; k < n; ++k) sum[k] += cands[c][k];
      }
    }
    bool valid = true;
    for (int i = 0; i < m && valid; ++i) valid = sign_of(dot(walls[i], sum)) == s[i];
    if (!valid) continue;
    cones.push_back(std::move(cone));
  }
  Fan fan(n, std::move(cones));
  fan.walls_ = walls;
  fan.validate();
  return fan;
}

Fan Fan::refined_by(const std::vector<Vec>& covectors) const {
  if (walls_.empty())
    throw error("fan: refinement requires an arrangement-built fan");
  std::vector<Vec> walls = walls_;
  walls.insert(walls.end(), covectors.begin(), covectors.end());
  return from_arrangement(dim_, walls);
}

ConicCFun ConicCFun::constant(FanPtr fan, Ring ring, i64 value) {
  std::vector<i64> vals(fan->size(), ring.normalize(value));
  return ConicCFun{std::move(fan), ring, std::move(vals)};
}

ConicCFun ConicCFun::origin_indicator(FanPtr fan, Ring ring, i64 value) {
  std::vector<i64> vals(fan->size(), 0);
  vals[fan->find(Cone{})] = ring.normalize(value);
  return ConicCFun{std::move(fan), ring, std::move(vals)};
}

Scalar halfspace_chi(const Cone& c, int ambient_dim, const Covector& xi, HalfspaceMode mode,
                     Ring ring) {
  if (ambient_dim > 3) throw error("halfspace_chi: dimension > 3 unsupported");
  if (static_cast<int>(xi.num.size()) != ambient_dim)
    throw error("halfspace_chi: covector dimension mismatch");
  if (xi.den <= 0) throw error("halfspace_chi: denominator must be positive");
  const int d = c.dim(ambient_dim);
  bool pos = false, neg = false;
  for (const auto& r : c.rays) {
    i64 v = dot(xi.num, r);
    pos = pos || v > 0;
    neg = neg || v < 0;
  }
  // each region meets relint(C) in a relatively open convex set, so its
  // χ_c is (−1)^dim or 0; only the dimension and emptiness need the signs
  i64 lt_zero = neg ? sign_pow(d) : 0;
  i64 eq_zero = (!pos && !neg) ? sign_pow(d) : ((pos && neg) ? sign_pow(d - 1) : 0);
  i64 eq_one = pos ? sign_pow(d - 1) : 0;
  i64 result = 0;
  switch (mode) {
    case HalfspaceMode::LtZero:
      result = lt_zero;
      break;
    case HalfspaceMode::EqZero:
      result = eq_zero;
      break;
    case HalfspaceMode::EqOne:
      result = eq_one;
      break;
    case HalfspaceMode::LtOne:
      // {ξ≤0 part} plus (slice at ξ=1) × (0,1)
      result = lt_zero + eq_zero - eq_one;
      break;
  }
  return Scalar{ring, ring.normalize(result)};
}

Scalar ft_value(const ConicCFun& f, const Covector& xi) {
  const Ring& ring = f.ring;
  i64 total = 0;
  for (int id = 0; id < f.fan->size(); ++id) {
    if (f.values[id] == 0) continue;
    Scalar chi = halfspace_chi(f.fan->cone(id), f.fan->ambient_dim(), xi, HalfspaceMode::LtOne, ring);
    total = ring.add(total, ring.mul(f.values[id], chi.value));
  }
  return Scalar{ring, total};
}

ConicCFun fourier_transform(const ConicCFun& f, FanPtr dual_fan) {
  if (dual_fan->ambient_dim() != f.fan->ambient_dim())
    throw error("fourier_transform: dual fan dimension mismatch");
  ConicCFun out{dual_fan, f.ring, std::vector<i64>(dual_fan->size(), 0)};
  const int n = dual_fan->ambient_dim();
  for (int id = 0; id < dual_fan->size(); ++id) {
    const Cone& D = dual_fan->cone(id);
    // interior sample: the ray sum; perturbations re-add each ray
    std::vector<Covector> samples;
    Vec sum(n, 0);
    for (const auto& r : D.rays)
      for (int k = 0; k < n; ++k) sum[k] += r[k];
    samples.push_back(Covector{sum, 1});
    for (const auto& r : D.rays) {
      Vec s = sum;
      for (int k = 0; k < n; ++k) s[k] += r[k];
      samples.push_back(Covector{s, 1});
    }
    i64 value = 0;
    for (size_t i = 0; i < samples.size(); ++i) {
      i64 v = ft_value(f, samples[i]).value;
      if (i == 0)
        value = v;
      else if (v != value)
        throw error("fourier_transform: transform is not constant on cone [" + D.key() +
                    "]; refine the dual fan");
    }
    out.values[id] = value;
  }
  return out;
}

i64 PermutationAction::order() const {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  i64 ord = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    i64 len = 0;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j];
      ++len;
    }
    ord = ord / gcd64(ord, len) * len;
  }
  return ord;
}

Vec PermutationAction::apply(const Vec& v) const {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[perm[i]] = v[i];
  return out;
}

std::vector<Vec> PermutationAction::fixed_basis() const {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::vector<Vec> basis;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    Vec b(n, 0);
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      b[j] = 1;
      j = perm[j];
    }
    basis.push_back(std::move(b));
  }
  return basis;
}

bool is_invariant(const ConicCFun& f, const PermutationAction& act) {
  for (int id = 0; id < f.fan->size(); ++id) {
    Cone img;
    for (const auto& r : f.fan->cone(id).rays) img.rays.push_back(act.apply(r));
    int other = f.fan->find(img);
    if (other < 0) return false;
    if (f.values[other] != f.values[id]) return false;
  }
  return true;
}

ConicSmith smith_conic(const ConicCFun& f, const PermutationAction& act) {
  const int n = f.fan->ambient_dim();
  if (static_cast<int>(act.perm.size()) != n) throw error("smith_conic: permutation size mismatch");
  i64 p = act.order();
  if (!is_prime(p)) throw error("smith_conic: action must have prime order");
  if (!f.ring.is_field() || f.ring.prime() != p)
    throw error("smith_conic: function must take values in F_" + std::to_string(p));

  for (int id = 0; id < f.fan->size(); ++id) {
    Cone img;
    for (const auto& r : f.fan->cone(id).rays) img.rays.push_back(act.apply(r));
    if (f.fan->find(img) < 0)
      throw error("smith_conic: fan is not invariant under the action; refine it");
  }
  if (!is_invariant(f, act)) throw error("smith_conic: function is not invariant");

  const auto basis = act.fixed_basis();
  const int k = static_cast<int>(basis.size());
  // cycle lengths, for expressing fixed vectors in the cycle basis
  std::vector<i64> cycle_len(k);
  for (int j = 0; j < k; ++j)
    cycle_len[j] = std::count(basis[j].begin(), basis[j].end(), i64(1));

  auto to_cycle_coords = [&](const Vec& v) {
    Vec out(k);
    for (int j = 0; j < k; ++j) {
      // a fixed vector is constant on each cycle; read the common value
      i64 val = 0;
      for (int i = 0; i < n; ++i)
        if (basis[j][i]) {
          val = v[i];
          break;
        }
      out[j] = val;
    }
    return out;
  };

  std::vector<Cone> fixed_cones;
  std::vector<i64> fixed_values;
  for (int id = 0; id < f.fan->size(); ++id) {
    const Cone& c = f.fan->cone(id);
    bool inside = true;
    for (const auto& r : c.rays) inside = inside && act.apply(r) == r;
    if (!inside) continue;
    Cone small;
    for (const auto& r : c.rays) small.rays.push_back(to_cycle_coords(r));
    fixed_cones.push_back(std::move(small));
    fixed_values.push_back(f.values[id]);
  }

  FanPtr fixed_fan;
  try {
    Fan built(k, std::move(fixed_cones));
    built.validate();
    fixed_fan = share(std::move(built));
  } catch (const error& e) {
    throw error(std::string("smith_conic: fan not adapted to the fixed subspace: ") + e.what());
  }
  ConicSmith out{fixed_fan, ConicCFun{fixed_fan, f.ring, std::vector<i64>(fixed_fan->size(), 0)}};
  // fan construction re-sorts cones; place values by lookup
  int idx = 0;
  for (int id = 0; id < f.fan->size(); ++id) {
    const Cone& c = f.fan->cone(id);
    bool inside = true;
    for (const auto& r : c.rays) inside = inside && act.apply(r) == r;
    if (!inside) continue;
    Cone small;
    for (const auto& r : c.rays) small.rays.push_back(to_cycle_coords(r));
    out.value.values[fixed_fan->find(small)] = fixed_values[idx++];
  }
  return out;
}

Covector average_lift(const Covector& xi_fixed, const PermutationAction& act) {
  const auto basis = act.fixed_basis();
  const int k = static_cast<int>(basis.size());
  const int n = static_cast<int>(act.perm.size());
  if (static_cast<int>(xi_fixed.num.size()) != k)
    throw error("average_lift: covector lives on the wrong space");
  std::vector<i64> cycle_len(k);
  i64 lcm = 1;
  for (int j = 0; j < k; ++j) {
    cycle_len[j] = std::count(basis[j].begin(), basis[j].end(), i64(1));
    lcm = lcm / gcd64(lcm, cycle_len[j]) * cycle_len[j];
  }
  Covector out;
  out.num.assign(n, 0);
  out.den = xi_fixed.den * lcm;
  for (int j = 0; j < k; ++j) {
    i64 coeff = xi_fixed.num[j] * (lcm / cycle_len[j]);
    for (int i = 0; i < n; ++i)
      if (basis[j][i]) out.num[i] = coeff;
  }
  // normalize
  i64 g = out.den;
  for (i64 x : out.num) g = gcd64(g, x);
  if (g > 1) {
    out.den /= g;
    for (auto& x : out.num) x /= g;
  }
  return out;
}

}  // namespace smith
