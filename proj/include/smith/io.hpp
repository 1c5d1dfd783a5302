#pragma once
// JSON file formats for every domain type, with canonical key ordering so
// round-trips are byte-stable.

#include <string>

#include <json.hpp>

#include "smith/cfun.hpp"
#include "smith/complex.hpp"
#include "smith/fan.hpp"
#include "smith/hecke.hpp"
#include "smith/invariant.hpp"
#include "smith/root_datum.hpp"
#include "smith/tate.hpp"

namespace smith::io {

using nlohmann::json;

// complex: {"simplices": [["a","b","c"], ...]} (maximal simplices)
json to_json(const Complex& c);
ComplexPtr complex_from_json(const json& j);

// action: {"generator": {"1":"4", ...}, "order": 2}
json action_to_json(const GComplex& g);
GComplex action_from_json(const ComplexPtr& base, const json& j);

// function: {"ring":"Z","coefficients":{"a,b":-1, ...}}
json to_json(const CFun& f);
CFun cfun_from_json(const ComplexPtr& carrier, const json& j);

// kernel: {"ring":"F2","entries":{"a,b|c":1, ...}}
json to_json(const HeckeElement& f);
HeckeElement kernel_from_json(const ComplexPtr& carrier, const json& j);

// group: {"generators":[{...}],"varpi":{...}}
json group_to_json(const FiniteGroupAction& act);
FiniteGroupAction group_from_json(const ComplexPtr& carrier, const json& j);

// fan: {"dim":2,"cones":[{"rays":[[1,0],[0,1]]}, ...]}
json to_json(const Fan& fan);
FanPtr fan_from_json(const json& j);

// conic function: {"ring":"Z","values":{"0,1;1,0":1, ...}}; the origin cone
// is keyed by the empty string
json to_json(const ConicCFun& f);
ConicCFun conic_from_json(const FanPtr& fan, const json& j);

// root datum: {"type":"C","rank":3,"isogeny":"sc"|"ad"}
json datum_to_json(char type, int rank, Isogeny isogeny);
RootDatumPtr datum_from_json(const json& j);

// invariant element: {"ring":"Z","side":"character","weights":{"1,0":1}}
json to_json(const InvariantElement& e);
InvariantElement element_from_json(const RootDatumPtr& datum, const json& j);

// tate complex: {"p":3,"degrees":{"0":{"dim":3,"action":[[...]]}},
//                "differentials":{"0":[[...]]}}
json to_json(const TateComplex& m);
TateComplex tate_from_json(const json& j);

std::string dump(const json& j);
json parse_file(const std::string& path);
void write_file(const std::string& path, const json& j);

}  // namespace smith::io
