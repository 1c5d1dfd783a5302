#include <algorithm>
#include <numeric>

#include "smith/checks.hpp"

namespace smith::checks {

namespace {

// exact rational scalar for the desk-scale polytope geometry
struct Rat {
  long long n = 0, d = 1;
  Rat() = default;
  Rat(long long num) : n(num), d(1) {}
  Rat(long long num, long long den) : n(num), d(den) { normalize(); }
  void normalize() {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0) d = 1;
  }
  Rat operator+(const Rat& o) const { return Rat(n * o.d + o.n * d, d * o.d); }
  Rat operator-(const Rat& o) const { return Rat(n * o.d - o.n * d, d * o.d); }
  Rat operator*(const Rat& o) const { return Rat(n * o.n, d * o.d); }
  Rat operator/(const Rat& o) const { return Rat(n * o.d, d * o.n); }
  bool operator==(const Rat& o) const { return n == o.n && d == o.d; }
  bool operator<(const Rat& o) const { return static_cast<__int128>(n) * o.d < static_cast<__int128>(o.n) * d; }
  bool operator<=(const Rat& o) const { return !(o < *this); }
};

using RPoint = std::vector<Rat>;

// χ_c of a region cut out by strict/nonstrict constraints, by triangulating
// the closed hull of candidate vertices and classifying open cells through
// their barycenters with the simplicial Euler integral.
struct Constraint {
  RPoint normal;  // a·x (compared to c)
  Rat c;
  bool strict;    // region: a·x < c (strict) or a·x <= c
};

Rat eval(const RPoint& a, const RPoint& x) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s = s + a[i] * x[i];
  return s;
}

bool satisfied(const Constraint& con, const RPoint& x, bool open_part) {
  Rat v = eval(con.normal, x);
  if (con.strict || open_part) return v < con.c;
  return v <= con.c;
}

// Euler characteristic of {x : a_i x (<|<=) c_i} within the closed hull of
// its vertex candidates, in dimension <= 2.  The constraints must make the
// closed region bounded.
i64 chi_of_region(const std::vector<Constraint>& cons, int dim) {
  // closed region: all constraints non-strict
  auto feasible_closed = [&](const RPoint& x) {
    for (const auto& con : cons)
      if (!(eval(con.normal, x) <= con.c)) return false;
    return true;
  };
  auto in_open_region = [&](const RPoint& x) {
    for (const auto& con : cons)
      if (!satisfied(con, x, con.strict)) return false;
    return true;
  };

  // candidate vertices: intersections of boundary hyperplanes
  std::vector<RPoint> verts;
  const int m = static_cast<int>(cons.size());
  if (dim == 1) {
    for (int i = 0; i < m; ++i) {
      if (cons[i].normal[0] == Rat(0)) continue;
      verts.push_back({cons[i].c / cons[i].normal[0]});
    }
  } else {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const auto& a = cons[i].normal;
        const auto& b = cons[j].normal;
        Rat det = a[0] * b[1] - a[1] * b[0];
        if (det == Rat(0)) continue;
        Rat x = (cons[i].c * b[1] - cons[j].c * a[1]) / det;
        Rat y = (a[0] * cons[j].c - b[0] * cons[i].c) / det;
        verts.push_back({x, y});
      }
  }
  std::vector<RPoint> hull;
  for (const auto& v : verts)
    if (feasible_closed(v) && std::find(hull.begin(), hull.end(), v) == hull.end())
      hull.push_back(v);
  if (hull.empty()) return 0;

  if (dim == 1) {
    std::sort(hull.begin(), hull.end(), [](const RPoint& a, const RPoint& b) { return a[0] < b[0]; });
    // vertices and open segments between consecutive vertices
    i64 chi = 0;
    for (size_t i = 0; i < hull.size(); ++i) {
      if (in_open_region(hull[i])) chi += 1;
      if (i + 1 < hull.size()) {
        RPoint mid = {(hull[i][0] + hull[i + 1][0]) / Rat(2)};
        if (in_open_region(mid)) chi -= 1;
      }
    }
    return chi;
  }

  // dim == 2: convex hull in rotational order (monotone chain, dropping
  // collinear points), then a fan triangulation classified by barycenters
  std::sort(hull.begin(), hull.end(), [](const RPoint& a, const RPoint& b) {
    if (!(a[0] == b[0])) return a[0] < b[0];
    return a[1] < b[1];
  });
  auto cross = [](const RPoint& o, const RPoint& a, const RPoint& b) {
    Rat v = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    return v.n > 0 ? 1 : (v.n < 0 ? -1 : 0);
  };
  std::vector<RPoint> poly;
  if (hull.size() <= 2) {
    poly = hull;
  } else {
    std::vector<RPoint> lower, upper;
    for (const auto& pt : hull) {
      while (lower.size() >= 2 && cross(lower[lower.size() - 2], lower.back(), pt) <= 0)
        lower.pop_back();
      lower.push_back(pt);
    }
    for (auto it = hull.rbegin(); it != hull.rend(); ++it) {
      while (upper.size() >= 2 && cross(upper[upper.size() - 2], upper.back(), *it) <= 0)
        upper.pop_back();
      upper.push_back(*it);
    }
    lower.pop_back();
    upper.pop_back();
    poly = lower;
    poly.insert(poly.end(), upper.begin(), upper.end());
  }

  const int k = static_cast<int>(poly.size());
  i64 chi = 0;
  auto bary = [&](const std::vector<int>& ids) {
    RPoint b = {Rat(0), Rat(0)};
    for (int id : ids) {
      b[0] = b[0] + poly[id][0];
      b[1] = b[1] + poly[id][1];
    }
    b[0] = b[0] / Rat(static_cast<long long>(ids.size()));
    b[1] = b[1] / Rat(static_cast<long long>(ids.size()));
    return b;
  };
  if (k == 1) return in_open_region(poly[0]) ? 1 : 0;
  if (k == 2) {
    if (in_open_region(poly[0])) chi += 1;
    if (in_open_region(poly[1])) chi += 1;
    if (in_open_region(bary({0, 1}))) chi -= 1;
    return chi;
  }
  // vertices
  for (int i = 0; i < k; ++i)
    if (in_open_region(bary({i}))) chi += 1;
  // boundary edges and fan diagonals
  for (int i = 0; i < k; ++i)
    if (in_open_region(bary({i, (i + 1) % k}))) chi -= 1;
  for (int i = 2; i < k - 1; ++i)
    if (in_open_region(bary({0, i}))) chi -= 1;
  // fan triangles
  for (int i = 1; i + 1 < k; ++i)
    if (in_open_region(bary({0, i, i + 1}))) chi += 1;
  return chi;
}

}  // namespace

i64 oracle_halfspace_chi(const Cone& c, int ambient_dim, const Covector& xi) {
  if (ambient_dim > 2) throw error("oracle_halfspace_chi: dimensions 1 and 2 only");
  // bounding-box radius: 1 + (max |ξ_i| · max ray coordinate)^2
  i64 max_xi = 1, max_ray = 1;
  for (i64 x : xi.num) max_xi = std::max(max_xi, x < 0 ? -x : x);
  for (const auto& r : c.rays)
    for (i64 x : r) max_ray = std::max(max_ray, x < 0 ? -x : x);
  const long long R = 1 + (max_xi * max_ray) * (max_xi * max_ray);

  auto run = [&](long long radius) -> i64 {
    const int d = c.dim(ambient_dim);
    std::vector<Constraint> cons;
    auto box = [&](int coord, int sign) {
      RPoint n(ambient_dim, Rat(0));
      n[coord] = Rat(sign);
      cons.push_back({n, Rat(radius), true});
    };
    // ξ(x) < 1 with the exact denominator
    {
      RPoint n;
      for (i64 x : xi.num) n.push_back(Rat(x, xi.den));
      cons.push_back({n, Rat(1), true});
    }
    if (d == 0) {
      // the origin: only the point itself
      for (int i = 0; i < ambient_dim; ++i) {
        RPoint n(ambient_dim, Rat(0));
        n[i] = Rat(1);
        cons.push_back({n, Rat(0), false});
        n[i] = Rat(-1);
        cons.push_back({n, Rat(0), false});
      }
      for (int i = 0; i < ambient_dim; ++i) {
        box(i, 1);
        box(i, -1);
      }
      return chi_of_region(cons, ambient_dim);
    }
    if (ambient_dim == 1) {
      // a ray: x has the sign of the generator, strictly
      for (const auto& s : c.rays)
        if (s[0] * c.rays[0][0] <= 0)
          throw error("oracle_halfspace_chi: 1-dimensional cone is not a ray");
      RPoint n = {Rat(c.rays[0][0] > 0 ? -1 : 1)};
      cons.push_back({n, Rat(0), true});
      box(0, 1);
      box(0, -1);
      return chi_of_region(cons, 1);
    }
    if (d == 1) {
      // a ray in the plane: all generators must be positive multiples
      const Vec& r = c.rays[0];
      for (const auto& s : c.rays)
        if (r[0] * s[1] - r[1] * s[0] != 0 || r[0] * s[0] + r[1] * s[1] <= 0)
          throw error("oracle_halfspace_chi: 1-dimensional cone is not a ray");
      RPoint line = {Rat(r[1]), Rat(-r[0])};
      cons.push_back({line, Rat(0), false});
      RPoint nline = {Rat(-r[1]), Rat(r[0])};
      cons.push_back({nline, Rat(0), false});
      // strictly positive multiples: r·x > 0, i.e. −r·x < 0
      cons.push_back({{Rat(-r[0]), Rat(-r[1])}, Rat(0), true});
      box(0, 1);
      box(0, -1);
      box(1, 1);
      box(1, -1);
      return chi_of_region(cons, 2);
    }
    // full-dimensional pointed cone in the plane: find the extreme pair
    // (u, v) with every ray inside the counterclockwise sector u -> v
    auto cross2 = [](const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; };
    Vec lo, hi;
    bool found = false;
    for (const auto& u : c.rays) {
      for (const auto& v : c.rays) {
        if (cross2(u, v) <= 0) continue;
        bool all_inside = true;
        for (const auto& r : c.rays)
          all_inside = all_inside && cross2(u, r) >= 0 && cross2(r, v) >= 0;
        if (all_inside) {
          lo = u;
          hi = v;
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw error("oracle_halfspace_chi: cone is not pointed");
    // relint: strictly inside the two extreme rays
    cons.push_back({{Rat(lo[1]), Rat(-lo[0])}, Rat(0), true});  // cross(lo, x) > 0
    cons.push_back({{Rat(-hi[1]), Rat(hi[0])}, Rat(0), true});  // cross(x, hi) > 0
    box(0, 1);
    box(0, -1);
    box(1, 1);
    box(1, -1);
    return chi_of_region(cons, 2);
  };

  i64 first = run(R);
  i64 second = run(2 * R + 1);
  if (first != second)
    throw error("oracle_halfspace_chi: bounding-box radius unstable; result differs at 2R");
  return first;
}

Scalar oracle_ft_value(const ConicCFun& f, const Covector& xi) {
  const Ring& ring = f.ring;
  i64 total = 0;
  for (int id = 0; id < f.fan->size(); ++id) {
    if (f.values[id] == 0) continue;
    i64 chi = oracle_halfspace_chi(f.fan->cone(id), f.fan->ambient_dim(), xi);
    total = ring.add(total, ring.mul(f.values[id], chi));
  }
  return Scalar{ring, total};
}

std::vector<std::vector<i64>> matrix_of_dualize(const ComplexPtr& c) {
  const int n = c->size();
  std::vector<std::vector<i64>> m(n, std::vector<i64>(n, 0));
  CFun probe(c, Ring::integers());
  for (int col = 0; col < n; ++col) {
    CFun e = CFun::indicator(c, Ring::integers(), col);
    CFun img = dualize(e);
    for (const auto& [row, v] : img.coefficients()) m[row][col] = v;
  }
  return m;
}

std::vector<std::vector<i64>> matrix_of_pushforward(const SimplicialMap& u) {
  const int rows = u.target()->size(), cols = u.source()->size();
  std::vector<std::vector<i64>> m(rows, std::vector<i64>(cols, 0));
  for (int col = 0; col < cols; ++col) {
    CFun e = CFun::indicator(u.source(), Ring::integers(), col);
    CFun img = pushforward(u, e);
    for (const auto& [row, v] : img.coefficients()) m[row][col] = v;
  }
  return m;
}

std::map<Vec, i64> oracle_branch_boxes(const InvariantElement& restricted) {
  // greedy weight sort against explicit box characters of an A1×A1-type
  // subsystem: the two positive roots must be orthogonal
  const RootDatum& h = *restricted.datum();
  if (h.semisimple_rank() != 2) throw error("oracle_branch_boxes: expected rank-2 subsystem");
  const RootPair b1 = h.simple_pairs()[0];
  const RootPair b2 = h.simple_pairs()[1];
  auto dotv = [](const Vec& a, const Vec& b) {
    i64 s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  if (dotv(b1.root, b2.coroot) != 0 || dotv(b2.root, b1.coroot) != 0)
    throw error("oracle_branch_boxes: subsystem is not A1×A1");

  std::map<Vec, i64> rest = restricted.weights();
  std::map<Vec, i64> out;
  auto height = [&](const Vec& v) { return dotv(v, b1.coroot) + dotv(v, b2.coroot); };
  int guard = 0;
  while (!rest.empty()) {
    if (++guard > 100000) throw error("oracle_branch_boxes: failed to terminate");
    // highest weight: maximal height, lexicographic tie-break
    Vec best;
    bool have = false;
    for (const auto& [v, m] : rest) {
      (void)m;
      if (!have || height(v) > height(best) || (height(v) == height(best) && v > best)) {
        best = v;
        have = true;
      }
    }
    i64 a = dotv(best, b1.coroot), b = dotv(best, b2.coroot);
    if (a < 0 || b < 0) throw error("oracle_branch_boxes: leading weight not dominant");
    i64 mult = rest[best];
    out[best] += mult;
    // subtract the box character: best − i·β1 − j·β2, 0 ≤ i ≤ a, 0 ≤ j ≤ b
    for (i64 i = 0; i <= a; ++i)
      for (i64 j = 0; j <= b; ++j) {
        Vec w = best;
        for (size_t t = 0; t < w.size(); ++t) w[t] -= i * b1.root[t] + j * b2.root[t];
        auto it = rest.find(w);
        i64 cur = (it == rest.end()) ? 0 : it->second;
        cur -= mult;
        if (cur == 0) {
          if (it != rest.end()) rest.erase(it);
        } else {
          rest[w] = cur;
        }
      }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

}  // namespace smith::checks
