#include "smith/cfun.hpp"

#include <algorithm>

namespace smith {

namespace {

int sign_pow(int d) { return (d & 1) ? -1 : 1; }

void check_same_carrier(const CFun& a, const CFun& b, const char* who) {
  if (!same_complex(a.carrier(), b.carrier()))
    throw error(std::string(who) + ": carrier mismatch");
  if (a.ring() != b.ring()) throw error(std::string(who) + ": ring mismatch");
}

}  // namespace

CFun CFun::constant(ComplexPtr carrier, Ring ring, i64 value) {
  CFun f(carrier, ring);
  for (int id = 0; id < carrier->size(); ++id) f.set(id, value);
  return f;
}

CFun CFun::indicator(ComplexPtr carrier, Ring ring, int simplex_id, i64 value) {
  CFun f(std::move(carrier), ring);
  f.set(simplex_id, value);
  return f;
}

void CFun::set(int simplex_id, i64 value) {
  if (simplex_id < 0 || simplex_id >= carrier_->size())
    throw error("CFun: simplex id out of range");
  value = ring_.normalize(value);
  if (value == 0)
    coeff_.erase(simplex_id);
  else
    coeff_[simplex_id] = value;
}

void CFun::add(int simplex_id, i64 value) { set(simplex_id, ring_.add(at(simplex_id), value)); }

CFun CFun::operator+(const CFun& o) const {
  check_same_carrier(*this, o, "CFun::+");
  CFun out = *this;
  for (const auto& [id, v] : o.coeff_) out.add(id, v);
  return out;
}

CFun CFun::operator-(const CFun& o) const {
  check_same_carrier(*this, o, "CFun::-");
  CFun out = *this;
  for (const auto& [id, v] : o.coeff_) out.add(id, ring_.neg(v));
  return out;
}

CFun CFun::scaled(i64 c) const {
  CFun out(carrier_, ring_);
  for (const auto& [id, v] : coeff_) out.set(id, ring_.mul(v, c));
  return out;
}

bool CFun::operator==(const CFun& o) const {
  return same_complex(carrier_, o.carrier_) && ring_ == o.ring_ && coeff_ == o.coeff_;
}

Scalar euler_integral(const CFun& f) {
  const Ring& ring = f.ring();
  i64 total = 0;
  for (const auto& [id, v] : f.coefficients())
    total = ring.add(total, ring.mul(v, sign_pow(f.carrier()->dim(id))));
  return Scalar{ring, total};
}

CFun pullback(const SimplicialMap& u, const CFun& g) {
  if (!same_complex(u.target(), g.carrier())) throw error("pullback: carrier mismatch");
  CFun out(u.source(), g.ring());
  for (int id = 0; id < u.source()->size(); ++id) {
    i64 v = g.at(u.image(id));
    if (v) out.set(id, v);
  }
  return out;
}

CFun pushforward(const SimplicialMap& u, const CFun& f) {
  if (!same_complex(u.source(), f.carrier())) throw error("pushforward: carrier mismatch");
  const Ring& ring = f.ring();
  CFun out(u.target(), ring);
  for (const auto& [id, v] : f.coefficients()) {
    int img = u.image(id);
    int drop = f.carrier()->dim(id) - u.target()->dim(img);
    out.add(img, ring.mul(v, sign_pow(drop)));
  }
  return out;
}

CFun dualize(const CFun& f) {
  const Complex& c = *f.carrier();
  const Ring& ring = f.ring();
  CFun out(f.carrier(), ring);
  // visit each nonzero f(τ) once, scatter into all faces σ ⊆ τ
  for (const auto& [tau, v] : f.coefficients()) {
    i64 w = ring.mul(v, sign_pow(c.dim(tau)));
    for (int sigma : c.faces(tau)) out.add(sigma, w);
  }
  return out;
}

CFun pushforward_star(const SimplicialMap& u, const CFun& f) {
  return dualize(pushforward(u, dualize(f)));
}

CFun pullback_shriek(const SimplicialMap& u, const CFun& g) {
  return dualize(pullback(u, dualize(g)));
}

StarFunctions standard_costandard(const ComplexPtr& m, const std::string& vertex) {
  int v = m->vertex_id(vertex);
  if (v < 0) throw error("standard_costandard: unknown vertex " + vertex);
  int vid = m->vertex_simplex(v);
  Ring ring = Ring::integers();
  CFun standard(m, ring), costandard(m, ring);
  int star_dim = 0;
  for (int cf : m->cofaces(vid)) star_dim = std::max(star_dim, m->dim(cf));
  for (int cf : m->cofaces(vid)) {
    costandard.set(cf, sign_pow(star_dim));
    for (int fc : m->faces(cf)) standard.set(fc, 1);
  }
  return {std::move(standard), std::move(costandard)};
}

CFun reduce_mod(const CFun& f, i64 p) {
  if (f.ring().is_field()) {
    if (f.ring().prime() != p) throw error("reduce_mod: function already lives over " + f.ring().name());
    return f;
  }
  CFun out(f.carrier(), Ring::mod(p));
  for (const auto& [id, v] : f.coefficients()) out.set(id, v);
  return out;
}

bool is_invariant(const GComplex& g, const CFun& f) {
  if (!same_complex(g.base(), f.carrier())) throw error("is_invariant: carrier mismatch");
  for (const auto& [id, v] : f.coefficients())
    if (f.at(g.simplex_image(id)) != v) return false;
  return true;
}

CFun smith_restrict(const GComplex& g, const CFun& f, const Subcomplex& fixed) {
  if (!same_complex(g.base(), f.carrier())) throw error("smith_restrict: carrier mismatch");
  if (!f.ring().is_field() || f.ring().prime() != g.prime())
    throw error("smith_restrict: function must take values in F_" + std::to_string(g.prime()) +
                " (reduce mod p explicitly first)");
  if (!g.regular())
    throw error("smith_restrict: action is not regular; apply barycentric subdivision first");
  if (!is_invariant(g, f)) throw error("smith_restrict: function is not invariant");
  CFun out(fixed.complex, f.ring());
  for (int id = 0; id < fixed.complex->size(); ++id) {
    i64 v = f.at(fixed.simplex_to_parent[id]);
    if (v) out.set(id, v);
  }
  return out;
}

CFun smith_restrict(const GComplex& g, const CFun& f) {
  return smith_restrict(g, f, fixed_subcomplex(g));
}

Specialization specialize(const ComplexPtr& c, const std::vector<int>& signs, const CFun& f) {
  if (!same_complex(c, f.carrier())) throw error("specialize: carrier mismatch");
  if (static_cast<int>(signs.size()) != c->vertex_count())
    throw error("specialize: need one sign per vertex");
  for (int s : signs)
    if (s < -1 || s > 1) throw error("specialize: signs must be -1, 0 or +1");

  std::vector<bool> in_upper(c->size(), false), in_zero(c->size(), false);
  for (int id = 0; id < c->size(); ++id) {
    bool has_plus = false, has_minus = false, all_zero = true;
    for (int v : c->simplex(id)) {
      if (signs[v] > 0) has_plus = true;
      if (signs[v] < 0) has_minus = true;
      if (signs[v] != 0) all_zero = false;
    }
    if (has_plus && has_minus) {
      std::string name;
      for (int v : c->simplex(id)) name += (name.empty() ? "" : ",") + c->label(v);
      throw error("specialize: simplex {" + name + "} mixes + and - vertices; subdivide first");
    }
    in_upper[id] = has_plus;
    in_zero[id] = all_zero;
  }

  const Ring& ring = f.ring();
  // j^* f, then the dual within the open set U (U is coface-closed, so the
  // coface sum inside U agrees with the ambient sum over U-simplices)
  CFun inner(c, ring);
  for (const auto& [tau, v] : f.coefficients()) {
    if (!in_upper[tau]) continue;
    i64 w = ring.mul(v, sign_pow(c->dim(tau)));
    for (int sigma : c->faces(tau))
      if (in_upper[sigma]) inner.add(sigma, w);
  }
  // extend by zero (already ambient) and dualize on c
  CFun outer = dualize(inner);
  Specialization out{induced_subcomplex(c, in_zero), CFun(nullptr, ring)};
  CFun val(out.zero_locus.complex, ring);
  for (int id = 0; id < out.zero_locus.complex->size(); ++id) {
    i64 v = outer.at(out.zero_locus.simplex_to_parent[id]);
    if (v) val.set(id, v);
  }
  out.value = std::move(val);
  return out;
}

CFun transport(const Subdivision& sub, const CFun& f) {
  if (!same_complex(sub.parent, f.carrier()))
    throw error("transport: function does not live on the subdivided complex");
  CFun out(sub.complex.base(), f.ring());
  for (int id = 0; id < sub.complex.base()->size(); ++id) {
    i64 v = f.at(sub.cell_to_base[id]);
    if (v) out.set(id, v);
  }
  return out;
}

}  // namespace smith
