#pragma once

// JSON descriptors consumed by the command-line tool and the test suites.
//
//   scale:  {"kind":"log"|"power"|"egorov"|"asymptotic", "m":2, "sigma":0.5}
//   growth: {"c0":0,"s":1,"gamma":-1,"delta":0,"phase":"pos","scale":{...}}
//   seq:    growth object or {"terms":[growth,...]}
//   gennum: {"rep": seq, "scale": {...}}
//   coeff:  {"form":"geometric","rho":0.5} | {"form":"constant"}
//           | {"form":"powerlaw","alpha":-2} | {"form":"subexp","beta":1}
//           | {"form":"finite","support":[[k,re,im],...]}
//   gauge:  {"tag":"identity"|"power"|"exp"|"log1p"|"affine", "k":2,"a":1,"b":0}

#include <json.hpp>

#include "seqgf/functorial.hpp"
#include "seqgf/gnum.hpp"
#include "seqgf/torus.hpp"

namespace seqgf {

using Json = nlohmann::ordered_json;

Scale scale_from_json(const Json& j);
Json scale_to_json(const Scale& s);

GrowthClass growth_from_json(const Json& j);
Json growth_to_json(const GrowthClass& g);

SymbolicSeq seq_from_json(const Json& j);
GenNumber gennumber_from_json(const Json& j);

CoeffFamily coeff_from_json(const Json& j);
Json coeff_to_json(const CoeffFamily& c);

GaugeFn gauge_from_json(const Json& j);

Json norm_to_json(const UltraNormValue& v);
Json verdict_to_json(const Verdict& v);

} // namespace seqgf
