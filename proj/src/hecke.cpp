#include "smith/hecke.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace smith {

namespace {

int sign_pow(int d) { return (d & 1) ? -1 : 1; }

}  // namespace

HeckeElement HeckeElement::all_pairs(ComplexPtr carrier, Ring ring, i64 value) {
  HeckeElement f(carrier, ring);
  for (int s = 0; s < carrier->size(); ++s)
    for (int t = 0; t < carrier->size(); ++t) f.set(s, t, value);
  return f;
}

HeckeElement HeckeElement::diagonal(ComplexPtr carrier, Ring ring, i64 value) {
  HeckeElement f(carrier, ring);
  for (int s = 0; s < carrier->size(); ++s) f.set(s, s, value);
  return f;
}

void HeckeElement::set(int s, int t, i64 value) {
  if (s < 0 || s >= carrier_->size() || t < 0 || t >= carrier_->size())
    throw error("HeckeElement: simplex id out of range");
  value = ring_.normalize(value);
  if (value == 0)
    kernel_.erase({s, t});
  else
    kernel_[{s, t}] = value;
}

void HeckeElement::add(int s, int t, i64 value) { set(s, t, ring_.add(at(s, t), value)); }

bool HeckeElement::operator==(const HeckeElement& o) const {
  return same_complex(carrier_, o.carrier_) && ring_ == o.ring_ && kernel_ == o.kernel_;
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  if (!same_complex(carrier_, o.carrier_) || ring_ != o.ring_)
    throw error("HeckeElement::+: carrier or ring mismatch");
  HeckeElement out = *this;
  for (const auto& [st, v] : o.kernel_) out.add(st.first, st.second, v);
  return out;
}

HeckeElement convolve(const HeckeElement& f1, const HeckeElement& f2) {
  if (!same_complex(f1.carrier(), f2.carrier())) throw error("convolve: carrier mismatch");
  if (f1.ring() != f2.ring()) throw error("convolve: ring mismatch");
  const Ring& ring = f1.ring();
  const Complex& c = *f1.carrier();

  // index f2 by its first coordinate
  std::vector<std::vector<std::pair<int, i64>>> by_first(c.size());
  for (const auto& [st, v] : f2.kernel()) by_first[st.first].push_back({st.second, v});

  HeckeElement out(f1.carrier(), ring);
  for (const auto& [sr, v1] : f1.kernel()) {
    auto [s, rho] = sr;
    i64 w = ring.mul(v1, sign_pow(c.dim(rho)));
    if (w == 0) continue;
    for (const auto& [t, v2] : by_first[rho]) out.add(s, t, ring.mul(w, v2));
  }
  return out;
}

HeckeElement reduce_mod(const HeckeElement& f, i64 p) {
  if (f.ring().is_field()) {
    if (f.ring().prime() != p)
      throw error("reduce_mod: kernel already lives over " + f.ring().name());
    return f;
  }
  HeckeElement out(f.carrier(), Ring::mod(p));
  for (const auto& [st, v] : f.kernel()) out.set(st.first, st.second, v);
  return out;
}

FiniteGroupAction::FiniteGroupAction(ComplexPtr carrier,
                                     std::vector<std::vector<int>> generators,
                                     std::vector<int> varpi_generator)
    : carrier_(std::move(carrier)) {
  const int n = carrier_->vertex_count();
  auto check_perm = [&](const std::vector<int>& p) {
    if (static_cast<int>(p.size()) != n) throw error("group action: permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (int v : p) {
      if (v < 0 || v >= n || seen[v]) throw error("group action: not a permutation");
      seen[v] = true;
    }
    for (int id = 0; id < carrier_->size(); ++id) {
      Simplex img;
      for (int v : carrier_->simplex(id)) img.push_back(p[v]);
      std::sort(img.begin(), img.end());
      if (carrier_->find(img) < 0) throw error("group action: permutation is not simplicial");
    }
  };
  check_perm(varpi_generator);
  for (const auto& g : generators) check_perm(g);

  std::vector<int> id_perm(n);
  std::iota(id_perm.begin(), id_perm.end(), 0);
  std::set<std::vector<int>> closed;
  closed.insert(id_perm);
  closed.insert(varpi_generator);
  for (const auto& g : generators) closed.insert(g);
  // closure under composition
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> current(closed.begin(), closed.end());
    for (const auto& a : current)
      for (const auto& b : current) {
        std::vector<int> ab(n);
        for (int v = 0; v < n; ++v) ab[v] = a[b[v]];
        if (closed.insert(ab).second) grew = true;
        if (closed.size() > 100000) throw error("group action: group too large");
      }
  }
  elements_.assign(closed.begin(), closed.end());
  std::sort(elements_.begin(), elements_.end());
  // put the identity first
  auto idpos = std::find(elements_.begin(), elements_.end(), id_perm);
  std::rotate(elements_.begin(), idpos, idpos + 1);

  varpi_ = static_cast<int>(
      std::find(elements_.begin(), elements_.end(), varpi_generator) - elements_.begin());

  // ϖ must have prime order
  i64 order = 1;
  std::vector<int> power = varpi_generator;
  while (power != id_perm) {
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) next[v] = varpi_generator[power[v]];
    power = std::move(next);
    ++order;
    if (order > n + 1) break;
  }
  if (!is_prime(order)) throw error("group action: distinguished generator must have prime order");
  prime_ = order;

  // powers of ϖ as a set, for the normalizer test
  std::set<std::vector<int>> varpi_powers;
  power = id_perm;
  for (i64 k = 0; k < order; ++k) {
    varpi_powers.insert(power);
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) next[v] = varpi_generator[power[v]];
    power = std::move(next);
  }

  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> ab(n);
    for (int v = 0; v < n; ++v) ab[v] = a[b[v]];
    return ab;
  };
  auto invert = [&](const std::vector<int>& a) {
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[a[v]] = v;
    return inv;
  };
  const auto& w = varpi_generator;
  for (size_t i = 0; i < elements_.size(); ++i) {
    auto conj = compose(compose(elements_[i], w), invert(elements_[i]));
    if (conj == w) centralizer_.push_back(static_cast<int>(i));
    if (varpi_powers.count(conj)) normalizer_.push_back(static_cast<int>(i));
  }
}

int FiniteGroupAction::simplex_image(const std::vector<int>& element, int simplex_id) const {
  Simplex img;
  for (int v : carrier_->simplex(simplex_id)) img.push_back(element[v]);
  std::sort(img.begin(), img.end());
  return carrier_->require(img);
}

bool kernel_invariant_under(const HeckeElement& f, const ComplexPtr& c,
                            const std::vector<int>& vertex_perm) {
  auto image = [&](int id) {
    Simplex img;
    for (int v : c->simplex(id)) img.push_back(vertex_perm[v]);
    std::sort(img.begin(), img.end());
    return c->require(img);
  };
  for (const auto& [st, v] : f.kernel())
    if (f.at(image(st.first), image(st.second)) != v) return false;
  return true;
}

bool check_invariance(const HeckeElement& f, const FiniteGroupAction& act) {
  if (!same_complex(f.carrier(), act.carrier())) throw error("check_invariance: carrier mismatch");
  for (const auto& g : act.elements())
    if (!kernel_invariant_under(f, f.carrier(), g)) return false;
  return true;
}

SmithHecke smith_hecke(const HeckeElement& f, const FiniteGroupAction& act) {
  if (!same_complex(f.carrier(), act.carrier())) throw error("smith_hecke: carrier mismatch");
  if (!f.ring().is_field() || f.ring().prime() != act.prime())
    throw error("smith_hecke: kernel must take values in F_" + std::to_string(act.prime()));
  if (!check_invariance(f, act)) throw error("smith_hecke: kernel is not G-invariant");
  GComplex varpi = act.varpi_action();
  if (!varpi.regular())
    throw error("smith_hecke: the distinguished cyclic action is not regular; subdivide first");

  SmithHecke out{fixed_subcomplex(varpi), HeckeElement(nullptr, f.ring())};
  const auto& fixed = out.fixed;
  HeckeElement val(fixed.complex, f.ring());
  for (int s = 0; s < fixed.complex->size(); ++s)
    for (int t = 0; t < fixed.complex->size(); ++t) {
      i64 v = f.at(fixed.simplex_to_parent[s], fixed.simplex_to_parent[t]);
      if (v) val.set(s, t, v);
    }

  // certify invariance for the induced centralizer and normalizer actions
  auto induced = [&](int element_index) {
    const auto& g = act.elements()[element_index];
    std::vector<int> perm(fixed.complex->vertex_count());
    for (int v = 0; v < fixed.complex->vertex_count(); ++v) {
      int parent = fixed.vertex_to_parent[v];
      int image = g[parent];
      auto it = std::find(fixed.vertex_to_parent.begin(), fixed.vertex_to_parent.end(), image);
      if (it == fixed.vertex_to_parent.end())
        throw error("smith_hecke: normalizer element does not preserve the fixed subcomplex");
      perm[v] = static_cast<int>(it - fixed.vertex_to_parent.begin());
    }
    return perm;
  };
  for (int idx : act.normalizer()) {
    if (!kernel_invariant_under(val, fixed.complex, induced(idx)))
      throw error("smith_hecke: restricted kernel lost normalizer invariance (internal error)");
  }
  out.value = std::move(val);
  return out;
}

GroupTable::GroupTable(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const int n = order();
  if (n == 0) throw error("group table: empty");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw error("group table: not square");
    for (int v : row)
      if (v < 0 || v >= n) throw error("group table: entry out of range");
  }
  // identity must be element 0
  for (int g = 0; g < n; ++g)
    if (table_[0][g] != g || table_[g][0] != g)
      throw error("group table: element 0 is not an identity");
  // associativity
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw error("group table: multiplication is not associative");
  // inverses
  inv_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h)
      if (mul(g, h) == 0 && mul(h, g) == 0) {
        inv_[g] = h;
        break;
      }
    if (inv_[g] < 0) throw error("group table: element without inverse");
  }
}

GroupTable GroupTable::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return GroupTable(std::move(t));
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
  const int n = a.order(), m = b.order();
  std::vector<std::vector<int>> t(n * m, std::vector<int>(n * m));
  for (int i = 0; i < n * m; ++i)
    for (int j = 0; j < n * m; ++j)
      t[i][j] = a.mul(i / m, j / m) * m + b.mul(i % m, j % m);
  return GroupTable(std::move(t));
}

GroupTable GroupTable::symmetric3() {
  // permutations of {0,1,2} in lexicographic order; relabeled so the identity is 0
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = 6;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::array<int, 3> ab;
      for (int v = 0; v < 3; ++v) ab[v] = perms[a][perms[b][v]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
    }
  return GroupTable(std::move(t));
}

GroupTable GroupTable::dihedral4() {
  // elements r^a s^b, a in 0..3, b in 0..1, index = 2a + b
  auto idx = [](int a, int b) { return 2 * ((a % 4 + 4) % 4) + b; };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a1 = 0; a1 < 4; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 4; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          // (r^a1 s^b1)(r^a2 s^b2) = r^{a1 + (-1)^{b1} a2} s^{b1+b2}
          int a = b1 ? a1 - a2 : a1 + a2;
          t[idx(a1, b1)][idx(a2, b2)] = idx(a, (b1 + b2) % 2);
        }
  return GroupTable(std::move(t));
}

GroupTable GroupTable::quaternion8() {
  // {1, -1, i, -i, j, -j, k, -k} with indices 0..7
  auto neg = [](int x) { return x ^ 1; };
  auto base = [](int x) { return x >> 1; };  // 0:1, 1:i, 2:j, 3:k
  // multiplication of units: table over {1,i,j,k} with sign
  static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{+1, +1, +1, +1},
                                 {+1, -1, +1, -1},
                                 {+1, -1, -1, +1},
                                 {+1, +1, -1, -1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int bx = base(x), by = base(y);
      int b = prod[bx][by];
      int s = sign[bx][by];
      int negs = (x & 1) ^ (y & 1);
      int out = (b << 1) | (s < 0 ? 1 : 0);
      if (negs) out = neg(out);
      t[x][y] = out;
    }
  return GroupTable(std::move(t));
}

std::vector<i64> GroupRingBridge::to_algebra(const HeckeElement& f) const {
  std::vector<i64> a(group.order(), 0);
  for (int g = 0; g < group.order(); ++g) a[g] = f.at(0, g);
  return a;
}

HeckeElement GroupRingBridge::from_algebra(const std::vector<i64>& a) const {
  HeckeElement f(carrier, ring);
  for (int x = 0; x < group.order(); ++x)
    for (int y = 0; y < group.order(); ++y) f.set(x, y, a[group.mul(group.inverse(x), y)]);
  return f;
}

std::vector<i64> GroupRingBridge::opposite(const std::vector<i64>& a) const {
  std::vector<i64> b(group.order());
  for (int g = 0; g < group.order(); ++g) b[group.inverse(g)] = a[g];
  return b;
}

std::vector<i64> GroupRingBridge::multiply(const std::vector<i64>& a,
                                           const std::vector<i64>& b) const {
  std::vector<i64> c(group.order(), 0);
  for (int g = 0; g < group.order(); ++g)
    for (int h = 0; h < group.order(); ++h)
      c[group.mul(g, h)] = ring.add(c[group.mul(g, h)], ring.mul(a[g], b[h]));
  return c;
}

FiniteGroupAction GroupRingBridge::regular_action() const {
  const int n = group.order();
  std::vector<std::vector<int>> gens;
  for (int g = 1; g < n; ++g) {
    std::vector<int> perm(n);
    for (int h = 0; h < n; ++h) perm[h] = group.mul(g, h);
    gens.push_back(std::move(perm));
  }
  // distinguished ϖ: the first element of prime order
  for (int g = 1; g < n; ++g) {
    int order = 1, x = g;
    while (x != 0) {
      x = group.mul(g, x);
      ++order;
    }
    if (is_prime(order)) {
      std::vector<int> perm(n);
      for (int h = 0; h < n; ++h) perm[h] = group.mul(g, h);
      return FiniteGroupAction(carrier, gens, perm);
    }
  }
  throw error("group_ring_bridge: group has no element of prime order");
}

GroupRingBridge group_ring_bridge(const GroupTable& group, Ring ring) {
  if (group.order() > 99) throw error("group_ring_bridge: group too large");
  std::vector<std::vector<std::string>> verts;
  for (int g = 0; g < group.order(); ++g) {
    std::string name = "g" + std::string(g < 10 ? "0" : "") + std::to_string(g);
    verts.push_back({name});
  }
  GroupRingBridge out{share(Complex::from_maximal(verts)), group, ring};
  return out;
}

}  // namespace smith
