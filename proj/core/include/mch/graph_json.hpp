#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "mch/decorated_graph.hpp"

namespace mch {

// Schema: {"half_edges":[...], "sigma":[[h,h'],...],
//          "vertices":[{"id":..,"beta":[..],"chi":..,"n":..,"legs":[..]},...],
//          "filtration":[[edge indices],...]}
// Half-edges appear by label; "legs" lists the labels at each vertex;
// filtration entries index into the sorted edge list of the parsed graph.
nlohmann::json graph_to_json(const MarkedGraph& m);
nlohmann::json graph_to_json(const DecoratedGraph& g);

// Throws std::invalid_argument on schema violations or if the parsed graph
// fails validation.
MarkedGraph marked_graph_from_json(const nlohmann::json& j);
DecoratedGraph graph_from_json(const nlohmann::json& j);

// Undirected DOT output, one node per vertex labeled "beta;chi;n".
std::string graph_to_dot(const DecoratedGraph& g);

}  // namespace mch
