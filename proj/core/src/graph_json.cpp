#include "mch/graph_json.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace mch {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("graph json: " + msg);
}

void require(bool ok, const std::string& msg) {
  if (!ok) fail(msg);
}

}  // namespace

json graph_to_json(const MarkedGraph& m) {
  const DecoratedGraph& g = m.graph;
  json j;
  j["half_edges"] = g.half_edge_labels;
  json sig = json::array();
  for (auto [h1, h2] : g.edges())
    sig.push_back({g.half_edge_labels[h1], g.half_edge_labels[h2]});
  j["sigma"] = sig;
  json verts = json::array();
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    json jv;
    jv["id"] = g.vertex_ids[v];
    jv["beta"] = g.vertices[v].beta;
    jv["chi"] = g.vertices[v].chi;
    jv["n"] = g.vertices[v].n_marked;
    std::vector<int> legs;
    for (size_t h = 0; h < g.pi.size(); ++h)
      if (g.pi[h] == static_cast<int>(v)) legs.push_back(g.half_edge_labels[h]);
    jv["legs"] = legs;
    verts.push_back(jv);
  }
  j["vertices"] = verts;
  j["filtration"] = m.filtration;
  return j;
}

json graph_to_json(const DecoratedGraph& g) {
  MarkedGraph m;
  m.graph = g;
  return graph_to_json(m);
}

MarkedGraph marked_graph_from_json(const json& j) {
  require(j.is_object(), "top level must be an object");
  require(j.contains("half_edges") && j["half_edges"].is_array(), "missing half_edges array");
  require(j.contains("sigma") && j["sigma"].is_array(), "missing sigma array");
  require(j.contains("vertices") && j["vertices"].is_array(), "missing vertices array");

  MarkedGraph m;
  DecoratedGraph& g = m.graph;
  std::map<int, int> label_to_index;
  for (const auto& h : j["half_edges"]) {
    require(h.is_number_integer(), "half edge labels must be integers");
    int label = h.get<int>();
    require(!label_to_index.count(label), "duplicate half edge label");
    label_to_index[label] = static_cast<int>(g.half_edge_labels.size());
    g.half_edge_labels.push_back(label);
  }
  int H = static_cast<int>(g.half_edge_labels.size());
  g.sigma.assign(H, -1);
  g.pi.assign(H, -1);

  for (const auto& pair : j["sigma"]) {
    require(pair.is_array() && pair.size() == 2, "sigma entries must be pairs");
    auto it1 = label_to_index.find(pair[0].get<int>());
    auto it2 = label_to_index.find(pair[1].get<int>());
    require(it1 != label_to_index.end() && it2 != label_to_index.end(),
            "sigma pair uses unknown half edge");
    require(g.sigma[it1->second] == -1 && g.sigma[it2->second] == -1,
            "half edge paired twice in sigma");
    require(it1->second != it2->second, "sigma must be fixed point free");
    g.sigma[it1->second] = it2->second;
    g.sigma[it2->second] = it1->second;
  }

  for (const auto& jv : j["vertices"]) {
    require(jv.is_object() && jv.contains("id") && jv.contains("beta") && jv.contains("chi") &&
                jv.contains("n") && jv.contains("legs"),
            "vertex entries need id, beta, chi, n, legs");
    int v = static_cast<int>(g.vertices.size());
    g.vertex_ids.push_back(jv["id"].get<int>());
    GraphVertex gv;
    gv.beta = jv["beta"].get<BetaVec>();
    gv.chi = jv["chi"].get<int>();
    gv.n_marked = jv["n"].get<int>();
    g.vertices.push_back(gv);
    for (const auto& leg : jv["legs"]) {
      auto it = label_to_index.find(leg.get<int>());
      require(it != label_to_index.end(), "leg uses unknown half edge");
      require(g.pi[it->second] == -1, "half edge attached to two vertices");
      g.pi[it->second] = v;
    }
  }

  if (j.contains("filtration")) {
    require(j["filtration"].is_array(), "filtration must be an array of arrays");
    for (const auto& level : j["filtration"]) {
      require(level.is_array(), "filtration levels must be arrays");
      m.filtration.push_back(level.get<std::vector<int>>());
    }
  }

  auto errors = validate_marked(m);
  if (!errors.empty()) fail(errors.front());
  return m;
}

DecoratedGraph graph_from_json(const json& j) {
  MarkedGraph m = marked_graph_from_json(j);
  require(m.filtration.empty(), "expected a graph without filtration");
  return m.graph;
}

std::string graph_to_dot(const DecoratedGraph& g) {
  std::ostringstream out;
  out << "graph mch {\n";
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    out << "  v" << g.vertex_ids[v] << " [label=\"";
    for (size_t i = 0; i < g.vertices[v].beta.size(); ++i) {
      if (i) out << ",";
      out << g.vertices[v].beta[i];
    }
    out << ";" << g.vertices[v].chi << ";" << g.vertices[v].n_marked << "\"];\n";
  }
  for (auto [h1, h2] : g.edges())
    out << "  v" << g.vertex_ids[g.pi[h1]] << " -- v" << g.vertex_ids[g.pi[h2]] << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace mch
