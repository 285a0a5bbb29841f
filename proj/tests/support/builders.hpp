#pragma once

#include <memory>
#include <vector>

#include "mch/decorated_graph.hpp"
#include "mch/synthetic_cell.hpp"

namespace mch::testsupport {

inline GraphVertex vertex(std::int64_t beta, int chi, int n = 0) {
  GraphVertex v;
  v.beta = BetaVec{beta};
  v.chi = chi;
  v.n_marked = n;
  return v;
}

// pi[h] names the vertex of half edge h; sigma pairs (2e, 2e+1).
inline DecoratedGraph graph_of(std::vector<GraphVertex> vertices, const std::vector<int>& pi) {
  DecoratedGraph g;
  for (int v = 0; v < (int)vertices.size(); ++v) g.vertex_ids.push_back(v);
  g.vertices = std::move(vertices);
  for (int h = 0; h < (int)pi.size(); ++h) {
    g.half_edge_labels.push_back(h);
    g.sigma.push_back(h % 2 == 0 ? h + 1 : h - 1);
    g.pi.push_back(pi[h]);
  }
  return g;
}

// Two vertices joined by one edge.
inline DecoratedGraph dumbbell() {
  return graph_of({vertex(1, 1), vertex(1, 0)}, {0, 1});
}

// Two identically decorated vertices joined by two parallel edges.
inline DecoratedGraph theta() {
  return graph_of({vertex(1, 0), vertex(1, 0)}, {0, 1, 0, 1});
}

// One vertex with a self loop.
inline DecoratedGraph lollipop() {
  return graph_of({vertex(1, 0)}, {0, 0});
}

inline CellPtr synthetic(int k, int dim, std::vector<int> a_gens, std::vector<std::int64_t> tags,
                         std::vector<char> b_present = {}, std::vector<char> flips = {}) {
  SyntheticCell::Data d;
  d.k = k;
  d.dim = dim;
  d.a_gens = std::move(a_gens);
  d.tags = std::move(tags);
  d.b_present = b_present.empty() ? std::vector<char>(k, 1) : std::move(b_present);
  d.flips = flips.empty() ? std::vector<char>(k, 0) : std::move(flips);
  return std::make_shared<SyntheticCell>(std::move(d));
}

}  // namespace mch::testsupport
