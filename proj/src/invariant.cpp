#include "smith/invariant.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace smith {

namespace {

i64 dot(const Vec& a, const Vec& b) {
  i64 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec vadd(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Vec vsub(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Vec reflect(const RootDatum& rd, LatticeSide side, int i, const Vec& v) {
  return side == LatticeSide::Character ? rd.reflect_weight(i, v) : rd.reflect_coweight(i, v);
}

// W-orbit of a point by BFS over simple reflections.
std::set<Vec> orbit(const RootDatum& rd, LatticeSide side, const Vec& start) {
  std::set<Vec> seen{start};
  std::deque<Vec> queue{start};
  while (!queue.empty()) {
    Vec v = queue.front();
    queue.pop_front();
    for (int i = 0; i < rd.semisimple_rank(); ++i) {
      Vec w = reflect(rd, side, i, v);
      if (seen.insert(w).second) queue.push_back(w);
      if (seen.size() > 2000000) throw error("orbit: too large");
    }
  }
  return seen;
}

}  // namespace

InvariantElement InvariantElement::unit(RootDatumPtr datum, LatticeSide side, Ring ring) {
  InvariantElement e(std::move(datum), side, ring);
  e.set(Vec(e.datum()->ambient_rank(), 0), 1);
  return e;
}

InvariantElement InvariantElement::orbit_sum(RootDatumPtr datum, LatticeSide side, Ring ring,
                                             const Vec& point, i64 value) {
  InvariantElement e(datum, side, ring);
  for (const Vec& v : orbit(*datum, side, point)) e.set(v, value);
  return e;
}

void InvariantElement::set(const Vec& point, i64 value) {
  if (static_cast<int>(point.size()) != datum_->ambient_rank())
    throw error("InvariantElement: point dimension mismatch");
  value = ring_.normalize(value);
  if (value == 0)
    weights_.erase(point);
  else
    weights_[point] = value;
}

void InvariantElement::add(const Vec& point, i64 value) { set(point, ring_.add(at(point), value)); }

bool InvariantElement::invariant() const {
  for (const auto& [v, c] : weights_)
    for (int i = 0; i < datum_->semisimple_rank(); ++i)
      if (at(reflect(*datum_, side_, i, v)) != c) return false;
  return true;
}

InvariantElement InvariantElement::operator+(const InvariantElement& o) const {
  if (ring_ != o.ring_ || side_ != o.side_) throw error("InvariantElement::+: mismatch");
  InvariantElement out = *this;
  for (const auto& [v, c] : o.weights_) out.add(v, c);
  return out;
}

InvariantElement InvariantElement::operator-(const InvariantElement& o) const {
  if (ring_ != o.ring_ || side_ != o.side_) throw error("InvariantElement::-: mismatch");
  InvariantElement out = *this;
  for (const auto& [v, c] : o.weights_) out.add(v, ring_.neg(c));
  return out;
}

InvariantElement InvariantElement::operator*(const InvariantElement& o) const {
  if (ring_ != o.ring_ || side_ != o.side_) throw error("InvariantElement::*: mismatch");
  InvariantElement out(datum_, side_, ring_);
  for (const auto& [v, c] : weights_)
    for (const auto& [w, d] : o.weights_) out.add(vadd(v, w), ring_.mul(c, d));
  return out;
}

InvariantElement InvariantElement::scaled(i64 c) const {
  InvariantElement out(datum_, side_, ring_);
  for (const auto& [v, d] : weights_) out.set(v, ring_.mul(c, d));
  return out;
}

bool InvariantElement::operator==(const InvariantElement& o) const {
  return side_ == o.side_ && ring_ == o.ring_ && weights_ == o.weights_;
}

InvariantElement InvariantElement::reduced_mod(i64 p) const {
  if (ring_.is_field()) {
    if (ring_.prime() != p) throw error("reduced_mod: element already lives over " + ring_.name());
    return *this;
  }
  InvariantElement out(datum_, side_, Ring::mod(p));
  for (const auto& [v, c] : weights_) out.set(v, c);
  return out;
}

InvariantElement InvariantElement::restricted_to(RootDatumPtr sub) const {
  if (sub->ambient_rank() != datum_->ambient_rank())
    throw error("restrict_invariants: ambient lattices differ");
  // Weyl subgroup test on generators: each simple pair of `sub` must be a
  // root pair of the ambient datum (up to simultaneous sign)
  for (const auto& p : sub->simple_pairs()) {
    bool found = false;
    for (const auto& q : datum_->roots()) {
      if (q.root == p.root && q.coroot == p.coroot) found = true;
      Vec nr = q.root, nc = q.coroot;
      for (auto& x : nr) x = -x;
      for (auto& x : nc) x = -x;
      if (nr == p.root && nc == p.coroot) found = true;
      if (found) break;
    }
    if (!found)
      throw error("restrict_invariants: the smaller Weyl group is not a reflection subgroup");
  }
  if (!invariant()) throw error("restrict_invariants: element is not invariant");
  InvariantElement out(std::move(sub), side_, ring_);
  for (const auto& [v, c] : weights_) out.set(v, c);
  if (!out.invariant())
    throw error("restrict_invariants: restriction lost invariance (internal error)");
  return out;
}

InvariantElement weyl_character(RootDatumPtr rd, const Vec& highest) {
  const RootDatum& d = *rd;
  if (!d.dominant_weight(highest)) throw error("weyl_character: weight is not dominant");

  const Vec two_rho = d.two_rho();
  const Vec L = vadd(vadd(highest, highest), two_rho);  // 2(λ+ρ)
  const i64 LL = d.invariant_form(L, L);
  const auto& positive = d.positive_roots();
  const int k = d.semisimple_rank();

  // simple-root coefficient vectors of the positive roots, for exact string
  // bounds: ν = μ + jα is ≤ λ iff deficit(μ) − j·coeff(α) stays nonnegative
  std::vector<Vec> pos_coeffs;
  for (const auto& p : positive) pos_coeffs.push_back(d.simple_coefficients(p.root));

  // Freudenthal by increasing height deficit; every weight of the module is
  // reachable from the top through weights by single simple-root steps.
  std::map<Vec, i64> mult;      // weight -> multiplicity (0 allowed)
  std::map<Vec, Vec> deficits;  // weight -> coefficients of λ − μ
  mult[highest] = 1;
  deficits[highest] = Vec(k, 0);
  std::set<Vec> level{highest};
  while (!level.empty()) {
    std::map<Vec, Vec> next;  // candidate -> its deficit
    for (const Vec& mu : level) {
      if (mult[mu] <= 0) continue;
      const Vec& dc = deficits[mu];
      for (int i = 0; i < k; ++i) {
        Vec child = vsub(mu, d.simple_pairs()[i].root);
        if (mult.count(child) || next.count(child)) continue;
        Vec cdc = dc;
        ++cdc[i];
        next.emplace(std::move(child), std::move(cdc));
      }
    }
    level.clear();
    for (const auto& [mu, dc] : next) {
      const Vec M = vadd(vadd(mu, mu), two_rho);  // 2(μ+ρ)
      const i64 D = LL - d.invariant_form(M, M);
      i64 S = 0;  // Σ_{α>0} Σ_{j≥1} B(2(μ+jα), 2α) · m_{μ+jα}
      for (size_t a = 0; a < positive.size(); ++a) {
        const Vec& alpha = positive[a].root;
        const Vec& ac = pos_coeffs[a];
        Vec nu = mu;
        for (i64 j = 1;; ++j) {
          bool inside = true;
          for (int i = 0; i < k && inside; ++i) inside = dc[i] - j * ac[i] >= 0;
          if (!inside) break;  // ν would exceed the highest weight
          nu = vadd(nu, alpha);
          auto it = mult.find(nu);
          if (it != mult.end() && it->second != 0) {
            Vec two_nu = vadd(nu, nu);
            Vec two_alpha = vadd(alpha, alpha);
            S += d.invariant_form(two_nu, two_alpha) * it->second;
          }
        }
      }
      i64 m = 0;
      if (D != 0) {
        if ((2 * S) % D != 0) throw error("weyl_character: non-integral multiplicity (internal)");
        m = 2 * S / D;
      } else if (S != 0) {
        throw error("weyl_character: zero denominator with nonzero numerator (internal)");
      }
      if (m < 0) throw error("weyl_character: negative multiplicity (internal)");
      mult[mu] = m;
      deficits[mu] = dc;
      if (m > 0) level.insert(mu);
    }
  }

  InvariantElement out(rd, LatticeSide::Character, Ring::integers());
  for (const auto& [v, m] : mult)
    if (m > 0) out.set(v, m);
  if (!out.invariant()) throw error("weyl_character: result not invariant (internal)");
  return out;
}

i64 weyl_dimension(const RootDatum& rd, const Vec& highest) {
  if (!rd.dominant_weight(highest)) throw error("weyl_dimension: weight is not dominant");
  const Vec two_rho = rd.two_rho();
  __int128 num = 1, den = 1;
  auto reduce = [&]() {
    __int128 a = num < 0 ? -num : num, b = den < 0 ? -den : den;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
  };
  for (const auto& p : rd.positive_roots()) {
    i64 top = dot(vadd(vadd(highest, highest), two_rho), p.coroot);
    i64 bottom = dot(two_rho, p.coroot);
    num *= top;
    den *= bottom;
    reduce();
  }
  if (den != 1 && num % den != 0) throw error("weyl_dimension: non-integral (internal)");
  return static_cast<i64>(num / den);
}

std::map<Vec, i64> decompose(const InvariantElement& e) {
  if (e.side() != LatticeSide::Character)
    throw error("decompose: expected a character-side element");
  if (!e.invariant()) throw error("decompose: element is not Weyl-invariant");
  const RootDatum& d = *e.datum();
  const Vec two_rho = d.two_rho();

  std::map<Vec, i64> terms;
  InvariantElement rest = e;
  int guard = 0;
  while (!rest.is_zero()) {
    if (++guard > 100000) throw error("decompose: failed to terminate");
    // highest support point: maximal pairing with ρ, ties broken
    // lexicographically
    const Vec* best = nullptr;
    i64 best_h = 0;
    for (const auto& [v, c] : rest.weights()) {
      (void)c;
      i64 h = d.invariant_form(v, two_rho);
      if (!best || h > best_h || (h == best_h && v > *best)) {
        best = &v;
        best_h = h;
      }
    }
    Vec lambda = *best;
    if (!d.dominant_weight(lambda))
      throw error("decompose: leading term is not dominant; element not invariant?");
    i64 m = rest.at(lambda);
    InvariantElement chi = weyl_character(e.datum(), lambda);
    if (chi.ring() != rest.ring()) {
      if (rest.ring().is_field()) chi = chi.reduced_mod(rest.ring().prime());
    }
    rest = rest - chi.scaled(m);
    terms[lambda] = terms.count(lambda) ? terms[lambda] + m : m;
  }
  // verify the reconstruction
  InvariantElement check(e.datum(), e.side(), e.ring());
  for (const auto& [lambda, m] : terms) {
    InvariantElement chi = weyl_character(e.datum(), lambda);
    if (chi.ring() != e.ring() && e.ring().is_field()) chi = chi.reduced_mod(e.ring().prime());
    check = check + chi.scaled(m);
  }
  if (!(check == e)) throw error("decompose: reconstruction check failed (internal)");
  return terms;
}

InvariantElement ShaModel::unit() const {
  return InvariantElement::unit(datum, LatticeSide::Cocharacter, ring);
}

InvariantElement ShaModel::basis(const Vec& dominant_coweight) const {
  if (!datum->dominant_coweight(dominant_coweight))
    throw error("sha_model: coweight is not dominant");
  return InvariantElement::orbit_sum(datum, LatticeSide::Cocharacter, ring, dominant_coweight);
}

ShaModel sha_model(RootDatumPtr rd, Ring ring) { return ShaModel{std::move(rd), ring}; }

InvariantElement smith_sha(const InvariantElement& e, const RootDatum& ambient,
                           const KacNode& node) {
  if (node.order <= 1 || !is_prime(node.order))
    throw error("smith_sha: node order must be prime");
  if (!e.ring().is_field() || e.ring().prime() != node.order)
    throw error("smith_sha: element must take values in F_" + std::to_string(node.order));
  RootDatumPtr sub = share(centralizer_datum(ambient, node));
  return e.restricted_to(std::move(sub));
}

}  // namespace smith
