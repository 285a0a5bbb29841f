#pragma once

#include <nlohmann/json.hpp>

#include "mch/isotopy.hpp"
#include "mch/nice_generator.hpp"
#include "mch/pl_loop.hpp"

namespace mch {

// Schema: {"ambient":"R3"|"T3",
//          "loops":[{"coeff":"p/q","vertices":[["x","y","z"],...],
//                    "translations":[[i,i,i],...]?},...]}
// All rationals are "p" or "p/q" strings.
nlohmann::json chain_to_json(const OneChain& chain);
OneChain chain_from_json(const nlohmann::json& j);

// Schema: {"ambient":..., "times":["p/q",...],
//          "frames":[[chain loops per half edge],...]}
// frames[i][h] is the loop list of half edge h at times[i].
nlohmann::json isotopy_to_json(const Isotopy& iso);
Isotopy isotopy_from_json(const nlohmann::json& j);

// Schema: {"ambient":..., "pairs":[[a,b],...], "curves":[chain,...]}
// with one chain object per half edge slot. Parsing validates the generator.
nlohmann::json generator_to_json(const NiceGenerator& g);
NiceGenerator generator_from_json(const nlohmann::json& j);

}  // namespace mch
