#include "smith/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace smith {

namespace {

bool simplex_order(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string simplex_label(const Complex& c, const Simplex& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += c.label(s[i]);
  }
  return out;
}

std::string simplex_label_raw(const std::vector<std::string>& m) {
  std::string out;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) out += ',';
    out += m[i];
  }
  return out;
}

}  // namespace

Complex Complex::from_maximal(const std::vector<std::vector<std::string>>& maximal) {
  std::set<std::string> labelset;
  for (const auto& m : maximal)
    for (const auto& v : m) labelset.insert(v);
  std::vector<std::string> labels(labelset.begin(), labelset.end());
  std::map<std::string, int> id;
  for (size_t i = 0; i < labels.size(); ++i) id[labels[i]] = static_cast<int>(i);

  std::vector<Simplex> gens;
  for (const auto& m : maximal) {
    if (m.empty()) throw error("build_complex: empty simplex");
    Simplex s;
    for (const auto& v : m) s.push_back(id.at(v));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw error("build_complex: duplicate vertex in simplex [" +
                  simplex_label_raw(m) + "]");
    gens.push_back(std::move(s));
  }
  return from_simplices(std::move(labels), gens);
}

Complex Complex::from_simplices(std::vector<std::string> labels,
                                const std::vector<Simplex>& gens) {
  Complex c;
  c.labels_ = std::move(labels);
  std::set<Simplex> all;
  for (const auto& g : gens) {
    if (g.empty()) throw error("build_complex: empty simplex");
    for (int v : g)
      if (v < 0 || v >= c.vertex_count())
        throw error("build_complex: vertex index out of range");
    // enumerate nonempty subsets (faces); generators are small in practice
    const size_t n = g.size();
    if (n > 25) throw error("build_complex: simplex too large");
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
      Simplex f;
      for (size_t i = 0; i < n; ++i)
        if (mask & (size_t(1) << i)) f.push_back(g[i]);
      all.insert(std::move(f));
    }
  }
  c.simplices_.assign(all.begin(), all.end());
  c.finalize();
  return c;
}

void Complex::finalize() {
  std::sort(simplices_.begin(), simplices_.end(), simplex_order);
  index_.clear();
  for (size_t i = 0; i < simplices_.size(); ++i)
    index_[simplices_[i]] = static_cast<int>(i);
  cofaces_.assign(simplices_.size(), {});
  for (size_t s = 0; s < simplices_.size(); ++s)
    for (size_t t = 0; t < simplices_.size(); ++t)
      if (std::includes(simplices_[t].begin(), simplices_[t].end(),
                        simplices_[s].begin(), simplices_[s].end()))
        cofaces_[s].push_back(static_cast<int>(t));
}

int Complex::dim() const {
  int d = -1;
  for (const auto& s : simplices_) d = std::max<int>(d, static_cast<int>(s.size()) - 1);
  return d;
}

int Complex::vertex_id(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return -1;
}

int Complex::find(const Simplex& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

int Complex::require(const Simplex& s) const {
  int id = find(s);
  if (id < 0) {
    std::string msg = "not a simplex of the complex: {";
    for (size_t i = 0; i < s.size(); ++i) {
      if (i) msg += ',';
      msg += (s[i] >= 0 && s[i] < vertex_count()) ? labels_[s[i]] : std::to_string(s[i]);
    }
    throw error(msg + "}");
  }
  return id;
}

std::vector<int> Complex::faces(int id) const {
  const Simplex& s = simplices_[id];
  std::vector<int> out;
  const size_t n = s.size();
  for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
    Simplex f;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t(1) << i)) f.push_back(s[i]);
    out.push_back(require(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool same_complex(const ComplexPtr& a, const ComplexPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

SimplicialMap::SimplicialMap(ComplexPtr src, ComplexPtr tgt, std::vector<int> vertex_map)
    : src_(std::move(src)), tgt_(std::move(tgt)), vmap_(std::move(vertex_map)) {
  if (static_cast<int>(vmap_.size()) != src_->vertex_count())
    throw error("simplicial map: assignment must cover every source vertex");
  for (int v : vmap_)
    if (v < 0 || v >= tgt_->vertex_count())
      throw error("simplicial map: target vertex out of range");
  simage_.resize(src_->size());
  for (int id = 0; id < src_->size(); ++id) {
    Simplex img;
    for (int v : src_->simplex(id)) img.push_back(vmap_[v]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    int t = tgt_->find(img);
    if (t < 0) {
      std::string src_name = simplex_label(*src_, src_->simplex(id));
      throw error("simplicial map: image of {" + src_name + "} is not a target simplex");
    }
    simage_[id] = t;
  }
}

SimplicialMap SimplicialMap::from_labels(
    ComplexPtr src, ComplexPtr tgt,
    const std::map<std::string, std::string>& assignment) {
  std::vector<int> vmap(src->vertex_count(), -1);
  for (const auto& [from, to] : assignment) {
    int s = src->vertex_id(from);
    if (s < 0) throw error("simplicial map: unknown source vertex " + from);
    int t = tgt->vertex_id(to);
    if (t < 0) throw error("simplicial map: unknown target vertex " + to);
    vmap[s] = t;
  }
  for (int v = 0; v < src->vertex_count(); ++v)
    if (vmap[v] < 0)
      throw error("simplicial map: no image for source vertex " + src->label(v));
  return SimplicialMap(std::move(src), std::move(tgt), std::move(vmap));
}

SimplicialMap SimplicialMap::identity(ComplexPtr c) {
  std::vector<int> vmap(c->vertex_count());
  std::iota(vmap.begin(), vmap.end(), 0);
  return SimplicialMap(c, c, std::move(vmap));
}

SimplicialMap SimplicialMap::compose_after(const SimplicialMap& first) const {
  if (!same_complex(first.target(), source()))
    throw error("compose: inner map target differs from outer map source");
  std::vector<int> vmap(first.source()->vertex_count());
  for (size_t v = 0; v < vmap.size(); ++v) vmap[v] = vmap_[first.vertex_image(static_cast<int>(v))];
  return SimplicialMap(first.source(), target(), std::move(vmap));
}

SimplicialMap Subcomplex::inclusion(const ComplexPtr& parent) const {
  return SimplicialMap(complex, parent, vertex_to_parent);
}

Subcomplex induced_subcomplex(const ComplexPtr& parent, const std::vector<bool>& keep) {
  std::vector<int> vkeep;
  for (int id = 0; id < parent->size(); ++id) {
    if (!keep[id]) continue;
    for (int f : parent->faces(id))
      if (!keep[f]) throw error("induced_subcomplex: selection not closed under faces");
    if (parent->dim(id) == 0) vkeep.push_back(parent->simplex(id)[0]);
  }
  std::sort(vkeep.begin(), vkeep.end());
  std::vector<int> vnew(parent->vertex_count(), -1);
  std::vector<std::string> labels;
  for (size_t i = 0; i < vkeep.size(); ++i) {
    vnew[vkeep[i]] = static_cast<int>(i);
    labels.push_back(parent->label(vkeep[i]));
  }
  std::vector<Simplex> gens;
  for (int id = 0; id < parent->size(); ++id) {
    if (!keep[id]) continue;
    Simplex s;
    for (int v : parent->simplex(id)) s.push_back(vnew[v]);
    std::sort(s.begin(), s.end());
    gens.push_back(std::move(s));
  }
  Subcomplex out;
  out.complex = share(Complex::from_simplices(std::move(labels), gens));
  out.vertex_to_parent = vkeep;
  out.simplex_to_parent.resize(out.complex->size());
  for (int id = 0; id < out.complex->size(); ++id) {
    Simplex s;
    for (int v : out.complex->simplex(id)) s.push_back(out.vertex_to_parent[v]);
    std::sort(s.begin(), s.end());
    out.simplex_to_parent[id] = parent->require(s);
  }
  return out;
}

GComplex::GComplex(ComplexPtr base, std::vector<int> generator, i64 order)
    : base_(std::move(base)), gen_(std::move(generator)), order_(order) {
  prime_ = prime_power_base(order_);
  if (prime_ == 0 || order_ < 2)
    throw error("group action: order must be a prime power >= 2");
  const int n = base_->vertex_count();
  if (static_cast<int>(gen_.size()) != n)
    throw error("group action: generator must permute all vertices");
  std::vector<bool> seen(n, false);
  for (int v : gen_) {
    if (v < 0 || v >= n || seen[v]) throw error("group action: generator is not a permutation");
    seen[v] = true;
  }
  // powers of the generator on vertices
  powers_.assign(order_, std::vector<int>(n));
  std::iota(powers_[0].begin(), powers_[0].end(), 0);
  for (i64 k = 1; k < order_; ++k)
    for (int v = 0; v < n; ++v) powers_[k][v] = gen_[powers_[k - 1][v]];
  std::vector<int> full(n);
  for (int v = 0; v < n; ++v) full[v] = gen_[powers_[order_ - 1][v]];
  for (int v = 0; v < n; ++v)
    if (full[v] != v) throw error("group action: generator^order is not the identity");

  // the generator must induce a simplicial automorphism
  for (int id = 0; id < base_->size(); ++id) {
    Simplex img;
    for (int v : base_->simplex(id)) img.push_back(gen_[v]);
    std::sort(img.begin(), img.end());
    if (base_->find(img) < 0)
      throw error("group action: generator is not simplicial");
  }

  // regularity: a simplex mapped to itself must be fixed vertexwise
  regular_ = true;
  for (int id = 0; id < base_->size() && regular_; ++id) {
    for (i64 k = 1; k < order_; ++k) {
      Simplex img;
      for (int v : base_->simplex(id)) img.push_back(powers_[k][v]);
      std::sort(img.begin(), img.end());
      if (img == base_->simplex(id)) {
        bool pointwise = true;
        for (int v : base_->simplex(id)) pointwise = pointwise && powers_[k][v] == v;
        if (!pointwise) {
          regular_ = false;
          break;
        }
      }
    }
  }

  // deterministic orbit ids: orbit of a simplex keyed by its least member id
  simplex_orbit_.assign(base_->size(), -1);
  for (int id = 0; id < base_->size(); ++id) {
    if (simplex_orbit_[id] >= 0) continue;
    int least = id;
    std::vector<int> members;
    for (i64 k = 0; k < order_; ++k) {
      int m = simplex_image(id, k);
      members.push_back(m);
      least = std::min(least, m);
    }
    for (int m : members) simplex_orbit_[m] = least;
  }
}

int GComplex::vertex_image(int v, i64 k) const {
  k %= order_;
  if (k < 0) k += order_;
  return powers_[k][v];
}

int GComplex::simplex_image(int id, i64 k) const {
  Simplex img;
  for (int v : base_->simplex(id)) img.push_back(vertex_image(v, k));
  std::sort(img.begin(), img.end());
  return base_->require(img);
}

GComplex GComplex::with_base(ComplexPtr base) const { return GComplex(std::move(base), gen_, order_); }

Subcomplex fixed_subcomplex(const GComplex& g) {
  if (!g.regular())
    throw error("fixed_subcomplex: action is not regular; apply barycentric subdivision first");
  const Complex& c = *g.base();
  std::vector<bool> keep(c.size(), false);
  for (int id = 0; id < c.size(); ++id) {
    bool fixed = true;
    for (int v : c.simplex(id)) fixed = fixed && g.vertex_image(v) == v;
    keep[id] = fixed;
  }
  return induced_subcomplex(g.base(), keep);
}

Subdivision barycentric_subdivide(const GComplex& g) {
  const Complex& c = *g.base();
  // one vertex per simplex of the base
  std::vector<std::string> labels(c.size());
  for (int id = 0; id < c.size(); ++id) {
    std::string l;
    for (size_t i = 0; i < c.simplex(id).size(); ++i) {
      if (i) l += '_';
      l += c.label(c.simplex(id)[i]);
    }
    labels[id] = l;
  }
  {
    std::set<std::string> uniq(labels.begin(), labels.end());
    if (uniq.size() != labels.size())
      throw error("barycentric_subdivide: label collision; rename vertices");
  }

  // simplices = strictly increasing chains in the face order
  std::vector<Simplex> chains;
  std::vector<Simplex> stack;
  for (int id = 0; id < c.size(); ++id) stack.push_back({id});
  while (!stack.empty()) {
    Simplex chain = stack.back();
    stack.pop_back();
    chains.push_back(chain);
    int top = chain.back();
    for (int cf : c.cofaces(top)) {
      if (cf == top) continue;
      Simplex next = chain;
      next.push_back(cf);
      stack.push_back(std::move(next));
    }
  }
  // chain vertices are simplex ids, already strictly increasing in the
  // (dim, lex) order because proper cofaces always sort later
  ComplexPtr sub = share(Complex::from_simplices(std::move(labels), chains));

  std::vector<int> gen(c.size());
  for (int id = 0; id < c.size(); ++id) gen[id] = g.simplex_image(id, 1);

  Subdivision out{GComplex(sub, gen, g.order()), g.base(), {}};
  out.cell_to_base.resize(sub->size());
  for (int id = 0; id < sub->size(); ++id)
    out.cell_to_base[id] = sub->simplex(id).back();  // largest element of the chain
  return out;
}

}  // namespace smith
