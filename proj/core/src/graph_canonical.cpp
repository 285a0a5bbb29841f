#include "mch/graph_canonical.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

namespace mch {

namespace {

std::string vertex_color(const GraphVertex& v) {
  std::ostringstream os;
  os << "b";
  for (auto x : v.beta) os << x << ",";
  os << ";c" << v.chi << ";n" << v.n_marked;
  return os.str();
}

struct EdgeRec {
  int cu, cv, mask;
  int old_index;
  bool operator<(const EdgeRec& o) const {
    return std::tie(cu, cv, mask, old_index) < std::tie(o.cu, o.cv, o.mask, o.old_index);
  }
};

// Label of the graph under a given ordering (ordering[i] = old index placed
// at canonical position i). Copy order of parallel edges does not enter.
std::string label_for(const MarkedGraph& m, const std::vector<std::string>& colors,
                      const std::vector<int>& pos_of_old, const std::vector<int>& ordering,
                      const std::vector<int>& edge_mask) {
  const DecoratedGraph& g = m.graph;
  std::ostringstream os;
  os << "V:";
  for (int old : ordering) os << colors[old] << "|";
  const auto es = g.edges();
  std::vector<std::tuple<int, int, int>> recs;
  recs.reserve(es.size());
  for (std::size_t e = 0; e < es.size(); ++e) {
    int a = pos_of_old[g.pi[es[e].first]];
    int b = pos_of_old[g.pi[es[e].second]];
    recs.emplace_back(std::min(a, b), std::max(a, b), edge_mask[e]);
  }
  std::sort(recs.begin(), recs.end());
  os << "E:";
  for (auto& [a, b, mk] : recs) os << a << "-" << b << "m" << mk << "|";
  os << "F:";
  for (const auto& s : m.filtration) os << s.size() << ",";
  return os.str();
}

}  // namespace

CanonicalForm canonical_form(const MarkedGraph& m) {
  const DecoratedGraph& g = m.graph;
  const int V = g.num_vertices();
  const auto es = g.edges();
  const int E = (int)es.size();

  std::vector<int> edge_mask(E, 0);
  for (std::size_t i = 0; i < m.filtration.size(); ++i)
    for (int e : m.filtration[i]) edge_mask[e] |= 1 << i;

  std::vector<std::string> colors(V);
  for (int v = 0; v < V; ++v) colors[v] = vertex_color(g.vertices[v]);

  // Position blocks fixed by sorted color; permute within blocks.
  std::vector<int> base(V);
  for (int v = 0; v < V; ++v) base[v] = v;
  std::sort(base.begin(), base.end(), [&](int a, int b) {
    return std::tie(colors[a], a) < std::tie(colors[b], b);
  });
  std::vector<std::pair<int, int>> blocks;  // [begin,end) into base
  for (int i = 0; i < V;) {
    int j = i;
    while (j < V && colors[base[j]] == colors[base[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  std::string best_label;
  std::vector<int> best_ordering;
  std::vector<int> ordering = base;
  std::vector<int> pos_of_old(V);

  std::function<void(std::size_t)> rec = [&](std::size_t bi) {
    if (bi == blocks.size()) {
      for (int i = 0; i < V; ++i) pos_of_old[ordering[i]] = i;
      std::string lab = label_for(m, colors, pos_of_old, ordering, edge_mask);
      if (best_label.empty() || lab < best_label) {
        best_label = lab;
        best_ordering = ordering;
      }
      return;
    }
    auto [lo, hi] = blocks[bi];
    std::vector<int> block(ordering.begin() + lo, ordering.begin() + hi);
    std::sort(block.begin(), block.end());
    do {
      std::copy(block.begin(), block.end(), ordering.begin() + lo);
      rec(bi + 1);
    } while (std::next_permutation(block.begin(), block.end()));
    std::sort(block.begin(), block.end());
    std::copy(block.begin(), block.end(), ordering.begin() + lo);
  };
  if (V == 0) {
    best_label = label_for(m, colors, pos_of_old, ordering, edge_mask);
    best_ordering = ordering;
  } else {
    rec(0);
  }

  CanonicalForm out;
  out.label = best_label;
  out.vertex_map.assign(V, -1);
  for (int i = 0; i < V; ++i) out.vertex_map[best_ordering[i]] = i;

  // Canonical edge order: sorted (cu, cv, mask), ties by old index.
  std::vector<EdgeRec> recs(E);
  for (int e = 0; e < E; ++e) {
    int a = out.vertex_map[g.pi[es[e].first]];
    int b = out.vertex_map[g.pi[es[e].second]];
    recs[e] = {std::min(a, b), std::max(a, b), edge_mask[e], e};
  }
  std::sort(recs.begin(), recs.end());

  DecoratedGraph cg;
  cg.vertex_ids.resize(V);
  cg.vertices.resize(V);
  for (int v = 0; v < V; ++v) {
    cg.vertex_ids[v] = v;
    cg.vertices[v] = g.vertices[best_ordering[v]];
  }
  cg.half_edge_labels.resize(2 * E);
  cg.sigma.resize(2 * E);
  cg.pi.resize(2 * E);
  out.half_edge_map.assign(g.num_half_edges(), -1);
  out.edge_map.assign(E, -1);
  out.edge_flip.assign(E, 0);
  for (int j = 0; j < E; ++j) {
    const EdgeRec& r = recs[j];
    const int e = r.old_index;
    cg.half_edge_labels[2 * j] = 2 * j;
    cg.half_edge_labels[2 * j + 1] = 2 * j + 1;
    cg.sigma[2 * j] = 2 * j + 1;
    cg.sigma[2 * j + 1] = 2 * j;
    cg.pi[2 * j] = r.cu;
    cg.pi[2 * j + 1] = r.cv;
    out.edge_map[e] = j;
    const int h1 = es[e].first, h2 = es[e].second;
    bool flip = false;
    if (g.pi[h1] != g.pi[h2]) flip = out.vertex_map[g.pi[h1]] != r.cu;
    out.edge_flip[e] = flip;
    out.half_edge_map[h1] = flip ? 2 * j + 1 : 2 * j;
    out.half_edge_map[h2] = flip ? 2 * j : 2 * j + 1;
  }

  out.canonical.graph = std::move(cg);
  out.canonical.filtration.resize(m.filtration.size());
  for (std::size_t i = 0; i < m.filtration.size(); ++i) {
    std::vector<int> s;
    s.reserve(m.filtration[i].size());
    for (int e : m.filtration[i]) s.push_back(out.edge_map[e]);
    std::sort(s.begin(), s.end());
    out.canonical.filtration[i] = std::move(s);
  }
  return out;
}

CanonicalForm canonical_form(const DecoratedGraph& g) {
  MarkedGraph m;
  m.graph = g;
  return canonical_form(m);
}

}  // namespace mch
