#include <algorithm>
#include <set>

#include "smith/checks.hpp"

namespace smith::checks {

namespace {

int uniform(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

i64 small_value(Rng& rng) {
  // nonzero-biased small integers
  static const i64 pool[] = {-3, -2, -1, -1, 1, 1, 2, 3, 4, 0};
  return pool[rng() % 10];
}

}  // namespace

ComplexPtr random_complex(Rng& rng, int max_vertices, int max_generators, int max_arity) {
  const int nv = uniform(rng, 1, max_vertices);
  std::vector<std::vector<std::string>> gens;
  const int ng = uniform(rng, 1, max_generators);
  for (int g = 0; g < ng; ++g) {
    const int arity = uniform(rng, 1, std::min(max_arity, nv));
    std::set<int> verts;
    while (static_cast<int>(verts.size()) < arity) verts.insert(uniform(rng, 0, nv - 1));
    std::vector<std::string> simplex;
    for (int v : verts) simplex.push_back("v" + std::to_string(v));
    gens.push_back(std::move(simplex));
  }
  return share(Complex::from_maximal(gens));
}

ComplexPtr random_sphere_complex(Rng& rng) {
  // join of one or two simplex boundaries
  const int factors = uniform(rng, 1, 2);
  std::vector<std::vector<int>> factor_vertices;  // global vertex ids per factor
  std::vector<std::string> labels;
  for (int f = 0; f < factors; ++f) {
    const int a = uniform(rng, 1, factors == 1 ? 3 : 2);  // boundary of a simplex on a+1 vertices
    std::vector<int> verts;
    for (int v = 0; v <= a; ++v) {
      verts.push_back(static_cast<int>(labels.size()));
      labels.push_back("s" + std::to_string(f) + "v" + std::to_string(v));
    }
    factor_vertices.push_back(std::move(verts));
  }
  // simplices of a join: nonempty subsets missing at least one vertex of each
  // factor they touch; generators = maximal ones (drop one vertex per factor)
  std::vector<Simplex> gens;
  std::vector<size_t> drop(factors, 0);
  while (true) {
    Simplex s;
    for (int f = 0; f < factors; ++f)
      for (size_t v = 0; v < factor_vertices[f].size(); ++v)
        if (v != drop[f]) s.push_back(factor_vertices[f][v]);
    std::sort(s.begin(), s.end());
    gens.push_back(std::move(s));
    int pos = 0;
    while (pos < factors && ++drop[pos] == factor_vertices[pos].size()) drop[pos++] = 0;
    if (pos == factors) break;
  }
  ComplexPtr sphere = share(Complex::from_simplices(std::move(labels), gens));
  if (rng() % 2 == 0 && sphere->size() <= 30) {
    std::vector<int> ident(sphere->vertex_count());
    for (size_t i = 0; i < ident.size(); ++i) ident[i] = static_cast<int>(i);
    Subdivision sub = barycentric_subdivide(GComplex(sphere, ident, 2));
    sphere = sub.complex.base();
  }
  return sphere;
}

namespace {

// symmetric pattern complex: kfix fixed vertices, kfree orbit classes of
// size p; maximal simplices are closed under the rotation
GComplex symmetrized_gcomplex(Rng& rng, i64 p, int kfix, int kfree, int ngens, int arity,
                              bool free_only) {
  std::vector<std::string> labels;
  for (int i = 0; i < kfix; ++i) labels.push_back("f" + std::to_string(i));
  for (int j = 0; j < kfree; ++j)
    for (i64 t = 0; t < p; ++t)
      labels.push_back("o" + std::to_string(j) + "t" + std::to_string(t));
  auto fixed_id = [&](int i) { return i; };
  auto orbit_id = [&](int j, i64 t) {
    return kfix + j * static_cast<int>(p) + static_cast<int>(((t % p) + p) % p);
  };

  std::vector<Simplex> gens;
  const int n = static_cast<int>(labels.size());
  for (int g = 0; g < ngens; ++g) {
    // pick slots: fixed vertices or orbit classes with a phase
    std::set<int> slot_set;
    const int k = uniform(rng, std::min(2, arity), arity);
    std::set<int> used_classes;
    for (int pick = 0; pick < k; ++pick) {
      if (!free_only && kfix > 0 && rng() % 3 == 0) {
        slot_set.insert(fixed_id(uniform(rng, 0, kfix - 1)));
      } else if (kfree > 0) {
        int cls = uniform(rng, 0, kfree - 1);
        if (free_only) {
          if (used_classes.count(cls)) continue;  // one vertex per class
          used_classes.insert(cls);
        }
        slot_set.insert(orbit_id(cls, uniform(rng, 0, static_cast<int>(p) - 1)));
      }
    }
    if (slot_set.empty()) slot_set.insert(free_only ? orbit_id(0, 0) : 0);
    // add the whole rotation orbit of the chosen simplex
    for (i64 t = 0; t < p; ++t) {
      Simplex s;
      for (int v : slot_set) {
        if (v < kfix) {
          s.push_back(v);
        } else {
          int j = (v - kfix) / static_cast<int>(p);
          int phase = (v - kfix) % static_cast<int>(p);
          s.push_back(orbit_id(j, phase + t));
        }
      }
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      gens.push_back(std::move(s));
    }
  }
  ComplexPtr base = share(Complex::from_simplices(labels, gens));
  std::vector<int> rotation(n);
  for (int i = 0; i < kfix; ++i) rotation[i] = i;
  for (int j = 0; j < kfree; ++j)
    for (i64 t = 0; t < p; ++t) rotation[orbit_id(j, t)] = orbit_id(j, t + 1);
  // drop unused vertices: rebuild over the labels that actually appear
  std::vector<bool> used(n, false);
  for (int id = 0; id < base->size(); ++id)
    for (int v : base->simplex(id)) used[v] = true;
  if (!std::all_of(used.begin(), used.end(), [](bool b) { return b; })) {
    // orbits of used vertices are used (simplices come in orbits)
    std::vector<std::string> labels2;
    std::vector<int> remap(n, -1);
    for (int v = 0; v < n; ++v)
      if (used[v]) {
        remap[v] = static_cast<int>(labels2.size());
        labels2.push_back(labels[v]);
      }
    std::vector<Simplex> gens2;
    for (const auto& s : gens) {
      Simplex t;
      for (int v : s) t.push_back(remap[v]);
      std::sort(t.begin(), t.end());
      gens2.push_back(std::move(t));
    }
    std::vector<int> rot2(labels2.size());
    for (int v = 0; v < n; ++v)
      if (used[v]) rot2[remap[v]] = remap[rotation[v]];
    base = share(Complex::from_simplices(labels2, gens2));
    rotation = rot2;
  }
  return GComplex(base, rotation, p);
}

}  // namespace

GComplex random_regular_gcomplex(Rng& rng, i64 p, int max_simplices) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    int kfix = uniform(rng, 0, 2);
    int kfree = uniform(rng, 1, 2);
    GComplex g = symmetrized_gcomplex(rng, p, kfix, kfree, uniform(rng, 2, 4),
                                      uniform(rng, 2, 4), false);
    if (!g.regular()) {
      Subdivision sub = barycentric_subdivide(g);
      g = std::move(sub.complex);
    }
    if (g.base()->size() <= max_simplices && g.base()->size() > 0) return g;
  }
  throw error("random_regular_gcomplex: failed to generate within the cap");
}

GComplex random_free_gcomplex(Rng& rng, i64 p, int max_classes, int max_generators) {
  int kfree = uniform(rng, 2, std::max(2, max_classes));
  return symmetrized_gcomplex(rng, p, 0, kfree, uniform(rng, 1, max_generators),
                              uniform(rng, 2, kfree), true);
}

CFun random_cfun(Rng& rng, const ComplexPtr& c, Ring ring) {
  CFun f(c, ring);
  for (int id = 0; id < c->size(); ++id) f.set(id, small_value(rng));
  return f;
}

CFun random_invariant_cfun(Rng& rng, const GComplex& g, Ring ring) {
  CFun f(g.base(), ring);
  std::map<int, i64> orbit_value;
  for (int id = 0; id < g.base()->size(); ++id) {
    int orbit = g.simplex_orbit()[id];
    auto it = orbit_value.find(orbit);
    if (it == orbit_value.end()) it = orbit_value.emplace(orbit, small_value(rng)).first;
    f.set(id, it->second);
  }
  return f;
}

std::vector<int> random_invariant_signs(Rng& rng, const GComplex& g) {
  const Complex& c = *g.base();
  std::vector<int> signs(c.vertex_count(), 0);
  // constant on vertex orbits
  std::vector<int> orbit(c.vertex_count(), -1);
  for (int v = 0; v < c.vertex_count(); ++v) {
    if (orbit[v] >= 0) continue;
    int least = v;
    std::vector<int> members;
    int w = v;
    do {
      members.push_back(w);
      least = std::min(least, w);
      w = g.vertex_image(w);
    } while (w != v);
    for (int m : members) orbit[m] = least;
  }
  std::map<int, int> orbit_sign;
  for (int v = 0; v < c.vertex_count(); ++v) {
    if (!orbit_sign.count(orbit[v])) orbit_sign[orbit[v]] = uniform(rng, -1, 1);
    signs[v] = orbit_sign[orbit[v]];
  }
  // repair mixed simplices: flatten the + side of any offender to 0
  for (bool changed = true; changed;) {
    changed = false;
    for (int id = 0; id < c.size(); ++id) {
      bool plus = false, minus = false;
      for (int v : c.simplex(id)) {
        plus = plus || signs[v] > 0;
        minus = minus || signs[v] < 0;
      }
      if (plus && minus) {
        for (int v : c.simplex(id))
          if (signs[v] > 0)
            for (int w = 0; w < c.vertex_count(); ++w)
              if (orbit[w] == orbit[v]) signs[w] = 0;
        changed = true;
      }
    }
  }
  return signs;
}

EquivariantMapInstance random_equivariant_map(Rng& rng, i64 p) {
  // source pattern
  int kfix = uniform(rng, 0, 2);
  int kfree = uniform(rng, 1, 2);
  GComplex x = symmetrized_gcomplex(rng, p, kfix, kfree, uniform(rng, 2, 3),
                                    uniform(rng, 2, 3), false);
  const Complex& cx = *x.base();

  // vertex-level assignment constant on the orbit structure: a fixed vertex
  // goes to a fixed target slot; an orbit class goes to an orbit class with a
  // phase shift, or collapses to a fixed slot
  int tfix = uniform(rng, 1, 2);
  int tfree = uniform(rng, 0, 2);
  std::map<std::string, std::pair<int, int>> class_image;  // class -> (kind, data)
  // parse source labels back into (fixed i | class j, phase t)
  auto parse = [&](const std::string& label) -> std::pair<int, std::pair<int, int>> {
    if (label[0] == 'f') return {0, {std::stoi(label.substr(1)), 0}};
    auto tpos = label.find('t');
    return {1, {std::stoi(label.substr(1, tpos - 1)), std::stoi(label.substr(tpos + 1))}};
  };
  std::map<int, std::pair<int, int>> fixed_target;   // source fixed -> (0, slot)
  std::map<int, std::pair<int, int>> class_target;   // source class -> (kind, slot/class+shift)
  std::vector<std::string> target_labels;
  auto target_fixed_label = [&](int i) { return "F" + std::to_string(i); };
  auto target_orbit_label = [&](int j, i64 t) {
    return "O" + std::to_string(j) + "t" + std::to_string(((t % p) + p) % p);
  };
  for (int i = 0; i < tfix; ++i) target_labels.push_back(target_fixed_label(i));
  for (int j = 0; j < tfree; ++j)
    for (i64 t = 0; t < p; ++t) target_labels.push_back(target_orbit_label(j, t));
  auto target_vertex_index = [&](const std::string& label) {
    for (size_t i = 0; i < target_labels.size(); ++i)
      if (target_labels[i] == label) return static_cast<int>(i);
    throw error("random_equivariant_map: bad target label (internal)");
  };

  std::vector<int> vmap(cx.vertex_count());
  std::vector<std::string> image_label(cx.vertex_count());
  for (int v = 0; v < cx.vertex_count(); ++v) {
    auto [kind, data] = parse(cx.label(v));
    if (kind == 0) {
      auto it = fixed_target.find(data.first);
      if (it == fixed_target.end())
        it = fixed_target.emplace(data.first, std::make_pair(0, uniform(rng, 0, tfix - 1))).first;
      image_label[v] = target_fixed_label(it->second.second);
    } else {
      auto it = class_target.find(data.first);
      if (it == class_target.end()) {
        if (tfree > 0 && rng() % 3 != 0) {
          it = class_target
                   .emplace(data.first,
                            std::make_pair(1, uniform(rng, 0, tfree - 1) * static_cast<int>(p) +
                                                  uniform(rng, 0, static_cast<int>(p) - 1)))
                   .first;
        } else {
          it = class_target.emplace(data.first, std::make_pair(0, uniform(rng, 0, tfix - 1)))
                   .first;
        }
      }
      if (it->second.first == 0) {
        image_label[v] = target_fixed_label(it->second.second);
      } else {
        int cls = it->second.second / static_cast<int>(p);
        int shift = it->second.second % static_cast<int>(p);
        image_label[v] = target_orbit_label(cls, data.second + shift);
      }
    }
  }
  // target complex: images of source maximal simplices (their face closures)
  std::vector<Simplex> target_gens;
  for (int id = 0; id < cx.size(); ++id) {
    Simplex img;
    for (int v : cx.simplex(id)) img.push_back(target_vertex_index(image_label[v]));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    target_gens.push_back(std::move(img));
  }
  // also make every target vertex present
  for (size_t v = 0; v < target_labels.size(); ++v) target_gens.push_back({static_cast<int>(v)});
  ComplexPtr cy = share(Complex::from_simplices(target_labels, target_gens));
  std::vector<int> rotation(cy->vertex_count());
  for (int v = 0; v < cy->vertex_count(); ++v) {
    const std::string& label = cy->label(v);
    if (label[0] == 'F') {
      rotation[v] = v;
    } else {
      auto tpos = label.find('t');
      int cls = std::stoi(label.substr(1, tpos - 1));
      int phase = std::stoi(label.substr(tpos + 1));
      rotation[v] = cy->vertex_id(target_orbit_label(cls, phase + 1));
    }
  }
  GComplex y(cy, rotation, p);
  for (int v = 0; v < cx.vertex_count(); ++v) vmap[v] = cy->vertex_id(image_label[v]);
  SimplicialMap raw(x.base(), cy, vmap);

  // regularize both sides at once: the subdivision of an equivariant map is
  // the chain map on barycenters
  Subdivision sx = barycentric_subdivide(x);
  Subdivision sy = barycentric_subdivide(y);
  std::vector<int> sd_vmap(sx.complex.base()->vertex_count());
  for (int id = 0; id < x.base()->size(); ++id)
    sd_vmap[id] = raw.image(id);  // barycenter of σ ↦ barycenter of u(σ)
  SimplicialMap sd_map(sx.complex.base(), sy.complex.base(), sd_vmap);
  return EquivariantMapInstance{std::move(sx.complex), std::move(sy.complex), std::move(sd_map)};
}

HeckeElement random_kernel(Rng& rng, const ComplexPtr& c, Ring ring, int max_entries) {
  HeckeElement f(c, ring);
  const int n = c->size();
  const int entries = uniform(rng, 1, max_entries);
  for (int e = 0; e < entries; ++e)
    f.set(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1), small_value(rng));
  return f;
}

HeckeElement random_invariant_kernel(Rng& rng, const FiniteGroupAction& act, Ring ring,
                                     int max_orbits) {
  HeckeElement f(act.carrier(), ring);
  const int n = act.carrier()->size();
  const int orbits = uniform(rng, 1, max_orbits);
  for (int o = 0; o < orbits; ++o) {
    int s = uniform(rng, 0, n - 1), t = uniform(rng, 0, n - 1);
    i64 v = small_value(rng);
    for (const auto& g : act.elements()) f.set(act.simplex_image(g, s), act.simplex_image(g, t), v);
  }
  return f;
}

}  // namespace smith::checks
