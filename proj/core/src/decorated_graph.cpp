#include "mch/decorated_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mch {

std::vector<std::pair<int, int>> DecoratedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(num_edges());
  for (int h = 0; h < num_half_edges(); ++h) {
    if (h < sigma[h]) out.emplace_back(h, sigma[h]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int DecoratedGraph::valence(int v) const {
  int c = 0;
  for (int x : pi)
    if (x == v) ++c;
  return c;
}

std::vector<std::vector<int>> DecoratedGraph::legs() const {
  std::vector<std::vector<int>> out(num_vertices());
  for (int h = 0; h < num_half_edges(); ++h) out[pi[h]].push_back(h);
  return out;
}

BetaVec DecoratedGraph::total_beta() const {
  if (vertices.empty()) return {};
  BetaVec total(vertices[0].beta.size(), 0);
  for (const auto& v : vertices) total = add(total, v.beta);
  return total;
}

std::vector<std::string> validate_graph(const DecoratedGraph& g) {
  std::vector<std::string> bad;
  const int H = g.num_half_edges();
  const int V = g.num_vertices();
  if ((int)g.half_edge_labels.size() != H) bad.push_back("half_edge_labels length mismatch");
  if ((int)g.vertex_ids.size() != V) bad.push_back("vertex_ids length mismatch");
  if ((int)g.pi.size() != H) bad.push_back("pi length mismatch");
  if (H % 2 != 0) bad.push_back("odd number of half-edges");
  {
    std::set<int> s(g.half_edge_labels.begin(), g.half_edge_labels.end());
    if ((int)s.size() != H) bad.push_back("duplicate half-edge labels");
  }
  {
    std::set<int> s(g.vertex_ids.begin(), g.vertex_ids.end());
    if ((int)s.size() != V) bad.push_back("duplicate vertex ids");
  }
  for (int h = 0; h < H; ++h) {
    if (g.sigma[h] < 0 || g.sigma[h] >= H) {
      bad.push_back("sigma out of range");
      return bad;
    }
  }
  for (int h = 0; h < H; ++h) {
    if (g.sigma[g.sigma[h]] != h) bad.push_back("sigma is not an involution");
    if (g.sigma[h] == h) bad.push_back("sigma has a fixed point");
  }
  for (int h = 0; h < (int)g.pi.size(); ++h) {
    if (g.pi[h] < 0 || g.pi[h] >= V) bad.push_back("pi out of range");
  }
  std::size_t rank = V ? g.vertices[0].beta.size() : 0;
  for (const auto& v : g.vertices) {
    if (v.beta.size() != rank) bad.push_back("inconsistent beta dimension");
    if (v.chi > 1) bad.push_back("vertex chi exceeds 1");
    if (v.n_marked < 0) bad.push_back("negative marked-point count");
  }
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  return bad;
}

std::vector<std::string> validate_marked(const MarkedGraph& m) {
  std::vector<std::string> bad = validate_graph(m.graph);
  const int E = m.graph.num_edges();
  const auto& f = m.filtration;
  for (const auto& s : f) {
    if (!std::is_sorted(s.begin(), s.end())) bad.push_back("filtration set not sorted");
    for (int e : s) {
      if (e < 0 || e >= E) bad.push_back("filtration edge index out of range");
    }
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) bad.push_back("filtration set has duplicates");
  }
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    if (!std::includes(f[i + 1].begin(), f[i + 1].end(), f[i].begin(), f[i].end()))
      bad.push_back("filtration not nested");
  }
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  return bad;
}

std::int64_t euler_characteristic(const DecoratedGraph& g) {
  std::int64_t chi = 0;
  for (const auto& v : g.vertices) chi += (std::int64_t)v.chi - v.n_marked;
  chi -= g.num_edges();
  return chi;
}

bool vertex_unstable(const DecoratedGraph& g, int v) {
  return is_zero(g.vertices[v].beta) && 2 * g.vertices[v].chi - g.valence(v) >= 0;
}

bool is_stable(const DecoratedGraph& g) {
  for (int v = 0; v < g.num_vertices(); ++v)
    if (vertex_unstable(g, v)) return false;
  return true;
}

DecoratedGraph contract_edge(const DecoratedGraph& g, int e) {
  const auto es = g.edges();
  if (e < 0 || e >= (int)es.size()) throw std::invalid_argument("edge index out of range");
  const int h1 = es[e].first;
  const int h2 = es[e].second;
  const int v1 = g.pi[h1];
  const int v2 = g.pi[h2];

  DecoratedGraph out;

  // Half-edge survival map (drop h1, h2).
  std::vector<int> hmap(g.num_half_edges(), -1);
  int hn = 0;
  for (int h = 0; h < g.num_half_edges(); ++h) {
    if (h == h1 || h == h2) continue;
    hmap[h] = hn++;
    out.half_edge_labels.push_back(g.half_edge_labels[h]);
  }

  // Vertex map: self-edge keeps all vertices; otherwise merge v2 into v1.
  std::vector<int> vmap(g.num_vertices(), -1);
  if (v1 == v2) {
    out.vertices = g.vertices;
    out.vertex_ids = g.vertex_ids;
    out.vertices[v1].chi -= 1;
    for (int v = 0; v < g.num_vertices(); ++v) vmap[v] = v;
  } else {
    const int keep = std::min(v1, v2);
    const int drop = std::max(v1, v2);
    int vn = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (v == drop) continue;
      vmap[v] = vn++;
      out.vertex_ids.push_back(g.vertex_ids[v]);
      out.vertices.push_back(g.vertices[v]);
    }
    vmap[drop] = vmap[keep];
    GraphVertex& merged = out.vertices[vmap[keep]];
    const GraphVertex& other = g.vertices[drop == v2 ? v2 : v1];
    merged.beta = add(g.vertices[keep].beta, other.beta);
    merged.chi = g.vertices[v1].chi + g.vertices[v2].chi - 1;
    merged.n_marked = g.vertices[v1].n_marked + g.vertices[v2].n_marked;
  }

  out.sigma.resize(hn);
  out.pi.resize(hn);
  for (int h = 0; h < g.num_half_edges(); ++h) {
    if (hmap[h] < 0) continue;
    out.sigma[hmap[h]] = hmap[g.sigma[h]];
    out.pi[hmap[h]] = vmap[g.pi[h]];
  }
  return out;
}

MarkedGraph contract_edge(const MarkedGraph& m, int e) {
  const int El = m.l() >= 0 ? (int)m.filtration.back().size() : 0;
  if (m.l() >= 0 &&
      std::binary_search(m.filtration.back().begin(), m.filtration.back().end(), e))
    throw std::invalid_argument("cannot contract a filtration edge");
  (void)El;

  const auto old_edges = m.graph.edges();
  DecoratedGraph cg = contract_edge(m.graph, e);
  const auto new_edges = cg.edges();

  // Surviving half-edge pairs keep identity via labels.
  auto label_pair = [](const DecoratedGraph& g, std::pair<int, int> he) {
    int a = g.half_edge_labels[he.first], b = g.half_edge_labels[he.second];
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  std::vector<int> emap(old_edges.size(), -1);
  for (int i = 0; i < (int)old_edges.size(); ++i) {
    if (i == e) continue;
    auto key = label_pair(m.graph, old_edges[i]);
    for (int j = 0; j < (int)new_edges.size(); ++j) {
      if (label_pair(cg, new_edges[j]) == key) {
        emap[i] = j;
        break;
      }
    }
  }

  MarkedGraph out;
  out.graph = std::move(cg);
  out.filtration.reserve(m.filtration.size());
  for (const auto& s : m.filtration) {
    std::vector<int> ns;
    ns.reserve(s.size());
    for (int x : s) ns.push_back(emap[x]);
    std::sort(ns.begin(), ns.end());
    out.filtration.push_back(std::move(ns));
  }
  return out;
}

MarkedGraph remove_face(const MarkedGraph& m, int i) {
  if (i < 0 || i > m.l()) throw std::invalid_argument("filtration index out of range");
  MarkedGraph out = m;
  out.filtration.erase(out.filtration.begin() + i);
  return out;
}

}  // namespace mch
