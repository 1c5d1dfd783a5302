#include "smith/io.hpp"

#include <fstream>
#include <sstream>

namespace smith::io {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string simplex_key(const Complex& c, int id) {
  std::string out;
  for (int v : c.simplex(id)) {
    if (!out.empty()) out += ',';
    out += c.label(v);
  }
  return out;
}

int simplex_from_key(const Complex& c, const std::string& key) {
  Simplex s;
  for (const auto& label : split(key, ',')) {
    int v = c.vertex_id(label);
    if (v < 0) throw error("unknown vertex '" + label + "' in key '" + key + "'");
    s.push_back(v);
  }
  std::sort(s.begin(), s.end());
  int id = c.find(s);
  if (id < 0) throw error("key '" + key + "' does not name a simplex");
  return id;
}

}  // namespace

json to_json(const Complex& c) {
  // maximal simplices: those without a proper coface
  json arr = json::array();
  for (int id = 0; id < c.size(); ++id) {
    if (c.cofaces(id).size() > 1) continue;
    json s = json::array();
    for (int v : c.simplex(id)) s.push_back(c.label(v));
    arr.push_back(s);
  }
  return json{{"simplices", arr}};
}

ComplexPtr complex_from_json(const json& j) {
  if (!j.contains("simplices") || !j["simplices"].is_array())
    throw error("complex file: missing 'simplices' array");
  std::vector<std::vector<std::string>> maximal;
  for (const auto& s : j["simplices"]) {
    std::vector<std::string> verts;
    for (const auto& v : s) verts.push_back(v.get<std::string>());
    maximal.push_back(std::move(verts));
  }
  return share(Complex::from_maximal(maximal));
}

json action_to_json(const GComplex& g) {
  json gen = json::object();
  for (int v = 0; v < g.base()->vertex_count(); ++v)
    gen[g.base()->label(v)] = g.base()->label(g.vertex_image(v));
  return json{{"generator", gen}, {"order", g.order()}};
}

GComplex action_from_json(const ComplexPtr& base, const json& j) {
  if (!j.contains("generator") || !j.contains("order"))
    throw error("action file: need 'generator' and 'order'");
  std::vector<int> gen(base->vertex_count(), -1);
  for (const auto& [from, to] : j["generator"].items()) {
    int s = base->vertex_id(from);
    int t = base->vertex_id(to.get<std::string>());
    if (s < 0 || t < 0) throw error("action file: unknown vertex in generator");
    gen[s] = t;
  }
  for (int v = 0; v < base->vertex_count(); ++v)
    if (gen[v] < 0) throw error("action file: generator misses vertex " + base->label(v));
  return GComplex(base, gen, j["order"].get<i64>());
}

json to_json(const CFun& f) {
  json coeffs = json::object();
  for (const auto& [id, v] : f.coefficients()) coeffs[simplex_key(*f.carrier(), id)] = v;
  return json{{"ring", f.ring().name()}, {"coefficients", coeffs}};
}

CFun cfun_from_json(const ComplexPtr& carrier, const json& j) {
  if (!j.contains("ring")) throw error("function file: missing 'ring'");
  CFun f(carrier, Ring::parse(j["ring"].get<std::string>()));
  if (j.contains("coefficients"))
    for (const auto& [key, v] : j["coefficients"].items())
      f.set(simplex_from_key(*carrier, key), v.get<i64>());
  return f;
}

json to_json(const HeckeElement& f) {
  json entries = json::object();
  for (const auto& [st, v] : f.kernel())
    entries[simplex_key(*f.carrier(), st.first) + "|" + simplex_key(*f.carrier(), st.second)] = v;
  return json{{"ring", f.ring().name()}, {"entries", entries}};
}

HeckeElement kernel_from_json(const ComplexPtr& carrier, const json& j) {
  if (!j.contains("ring")) throw error("kernel file: missing 'ring'");
  HeckeElement f(carrier, Ring::parse(j["ring"].get<std::string>()));
  if (j.contains("entries"))
    for (const auto& [key, v] : j["entries"].items()) {
      auto parts = split(key, '|');
      if (parts.size() != 2) throw error("kernel file: bad key '" + key + "'");
      f.set(simplex_from_key(*carrier, parts[0]), simplex_from_key(*carrier, parts[1]),
            v.get<i64>());
    }
  return f;
}

json group_to_json(const FiniteGroupAction& act) {
  auto perm_json = [&](const std::vector<int>& p) {
    json out = json::object();
    for (int v = 0; v < act.carrier()->vertex_count(); ++v)
      out[act.carrier()->label(v)] = act.carrier()->label(p[v]);
    return out;
  };
  json gens = json::array();
  for (const auto& g : act.elements()) gens.push_back(perm_json(g));
  return json{{"generators", gens}, {"varpi", perm_json(act.varpi())}};
}

FiniteGroupAction group_from_json(const ComplexPtr& carrier, const json& j) {
  auto perm_from = [&](const json& obj) {
    std::vector<int> p(carrier->vertex_count(), -1);
    for (const auto& [from, to] : obj.items()) {
      int s = carrier->vertex_id(from);
      int t = carrier->vertex_id(to.get<std::string>());
      if (s < 0 || t < 0) throw error("group file: unknown vertex");
      p[s] = t;
    }
    for (int v = 0; v < carrier->vertex_count(); ++v)
      if (p[v] < 0) throw error("group file: permutation misses vertex " + carrier->label(v));
    return p;
  };
  if (!j.contains("varpi")) throw error("group file: missing 'varpi'");
  std::vector<std::vector<int>> gens;
  if (j.contains("generators"))
    for (const auto& g : j["generators"]) gens.push_back(perm_from(g));
  return FiniteGroupAction(carrier, gens, perm_from(j["varpi"]));
}

json to_json(const Fan& fan) {
  json cones = json::array();
  for (const auto& c : fan.cones()) {
    json rays = json::array();
    for (const auto& r : c.rays) rays.push_back(r);
    cones.push_back(json{{"rays", rays}});
  }
  return json{{"dim", fan.ambient_dim()}, {"cones", cones}};
}

FanPtr fan_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("cones")) throw error("fan file: need 'dim' and 'cones'");
  std::vector<Cone> cones;
  for (const auto& c : j["cones"]) {
    Cone cone;
    if (c.contains("rays"))
      for (const auto& r : c["rays"]) cone.rays.push_back(r.get<Vec>());
    cones.push_back(std::move(cone));
  }
  return share(Fan(j["dim"].get<int>(), std::move(cones)));
}

json to_json(const ConicCFun& f) {
  json values = json::object();
  for (int id = 0; id < f.fan->size(); ++id)
    if (f.values[id] != 0) values[f.fan->cone(id).key()] = f.values[id];
  return json{{"ring", f.ring.name()}, {"values", values}};
}

ConicCFun conic_from_json(const FanPtr& fan, const json& j) {
  if (!j.contains("ring")) throw error("conic function file: missing 'ring'");
  ConicCFun f{fan, Ring::parse(j["ring"].get<std::string>()),
              std::vector<i64>(fan->size(), 0)};
  if (j.contains("values"))
    for (const auto& [key, v] : j["values"].items()) {
      int found = -1;
      for (int id = 0; id < fan->size(); ++id)
        if (fan->cone(id).key() == key) {
          found = id;
          break;
        }
      if (found < 0) throw error("conic function file: key '" + key + "' is not a cone");
      f.values[found] = f.ring.normalize(v.get<i64>());
    }
  return f;
}

json datum_to_json(char type, int rank, Isogeny isogeny) {
  return json{{"type", std::string(1, type)},
              {"rank", rank},
              {"isogeny", isogeny == Isogeny::Adjoint ? "ad" : "sc"}};
}

RootDatumPtr datum_from_json(const json& j) {
  if (!j.contains("type") || !j.contains("rank")) throw error("root-datum file: need 'type' and 'rank'");
  std::string type = j["type"].get<std::string>();
  if (type.size() != 1) throw error("root-datum file: type must be a single letter A..G");
  Isogeny iso = Isogeny::SimplyConnected;
  if (j.contains("isogeny")) {
    std::string s = j["isogeny"].get<std::string>();
    if (s == "ad" || s == "adjoint")
      iso = Isogeny::Adjoint;
    else if (s != "sc" && s != "simply-connected")
      throw error("root-datum file: unknown isogeny '" + s + "'");
  }
  return share(RootDatum::simple(type[0], j["rank"].get<int>(), iso));
}

json to_json(const InvariantElement& e) {
  json weights = json::object();
  for (const auto& [v, c] : e.weights()) {
    std::string key;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) key += ',';
      key += std::to_string(v[i]);
    }
    weights[key] = c;
  }
  return json{{"ring", e.ring().name()},
              {"side", e.side() == LatticeSide::Character ? "character" : "cocharacter"},
              {"weights", weights}};
}

InvariantElement element_from_json(const RootDatumPtr& datum, const json& j) {
  Ring ring = j.contains("ring") ? Ring::parse(j["ring"].get<std::string>()) : Ring::integers();
  LatticeSide side = LatticeSide::Cocharacter;
  if (j.contains("side")) {
    std::string s = j["side"].get<std::string>();
    if (s == "character")
      side = LatticeSide::Character;
    else if (s != "cocharacter")
      throw error("element file: unknown side '" + s + "'");
  }
  InvariantElement e(datum, side, ring);
  if (j.contains("weights"))
    for (const auto& [key, v] : j["weights"].items()) {
      Vec point;
      for (const auto& part : split(key, ',')) point.push_back(std::stoll(part));
      if (static_cast<int>(point.size()) != datum->ambient_rank())
        throw error("element file: weight '" + key + "' has the wrong rank");
      e.set(point, v.get<i64>());
    }
  return e;
}

json to_json(const TateComplex& m) {
  json degrees = json::object(), diffs = json::object();
  for (const auto& [k, d] : m.degrees()) {
    degrees[std::to_string(k)] = json{{"dim", d.dim}, {"action", d.action}};
    PMat diff = m.differential(k);
    bool nonzero = false;
    for (const auto& row : diff)
      for (i64 x : row) nonzero = nonzero || x != 0;
    if (nonzero) diffs[std::to_string(k)] = diff;
  }
  return json{{"p", m.p()}, {"degrees", degrees}, {"differentials", diffs}};
}

TateComplex tate_from_json(const json& j) {
  if (!j.contains("p") || !j.contains("degrees")) throw error("tate file: need 'p' and 'degrees'");
  std::map<int, Degree> degrees;
  for (const auto& [key, d] : j["degrees"].items()) {
    Degree deg;
    deg.dim = d.at("dim").get<i64>();
    deg.action = d.contains("action") ? d["action"].get<PMat>() : PMat{};
    if (deg.action.empty() && deg.dim > 0) {
      deg.action.assign(deg.dim, std::vector<i64>(deg.dim, 0));
      for (i64 i = 0; i < deg.dim; ++i) deg.action[i][i] = 1;
    }
    degrees[std::stoi(key)] = std::move(deg);
  }
  std::map<int, PMat> diffs;
  if (j.contains("differentials"))
    for (const auto& [key, d] : j["differentials"].items())
      diffs[std::stoi(key)] = d.get<PMat>();
  return TateComplex(j["p"].get<i64>(), std::move(degrees), std::move(diffs));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw error("parse error in " + path + ": " + e.what());
  }
  return j;
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw error("cannot write " + path);
  out << dump(j);
}

}  // namespace smith::io
