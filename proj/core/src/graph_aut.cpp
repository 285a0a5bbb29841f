#include "mch/graph_aut.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

namespace mch {

namespace {

struct EdgeInfo {
  int u, v;       // sorted endpoint vertex indices
  int mask;       // filtration membership bitmask
  int h1, h2;     // reference half-edge pair, h1 < h2
};

struct PairKey {
  int u, v;
  bool operator<(const PairKey& o) const { return std::tie(u, v) < std::tie(o.u, o.v); }
};

// All bijections src -> dst (as index vectors into dst) matching masks.
void mask_bijections(const std::vector<int>& src_masks, const std::vector<int>& dst_masks,
                     std::vector<std::vector<int>>& out) {
  const int n = (int)src_masks.size();
  std::vector<int> perm;
  std::vector<char> used(n, 0);
  std::function<void()> rec = [&] {
    if ((int)perm.size() == n) {
      out.push_back(perm);
      return;
    }
    const int i = (int)perm.size();
    for (int j = 0; j < n; ++j) {
      if (used[j] || src_masks[i] != dst_masks[j]) continue;
      used[j] = 1;
      perm.push_back(j);
      rec();
      perm.pop_back();
      used[j] = 0;
    }
  };
  rec();
}

}  // namespace

std::vector<GraphAut> automorphism_group(const MarkedGraph& m) {
  const DecoratedGraph& g = m.graph;
  const int V = g.num_vertices();
  const int H = g.num_half_edges();
  const auto edge_pairs = g.edges();
  const int E = (int)edge_pairs.size();

  std::vector<EdgeInfo> edges(E);
  for (int e = 0; e < E; ++e) {
    EdgeInfo& info = edges[e];
    info.h1 = edge_pairs[e].first;
    info.h2 = edge_pairs[e].second;
    int a = g.pi[info.h1], b = g.pi[info.h2];
    info.u = std::min(a, b);
    info.v = std::max(a, b);
    info.mask = 0;
    for (std::size_t i = 0; i < m.filtration.size(); ++i) {
      if (std::binary_search(m.filtration[i].begin(), m.filtration[i].end(), e))
        info.mask |= 1 << i;
    }
  }

  // Edge indices grouped by endpoint pair.
  std::map<PairKey, std::vector<int>> by_pair;
  for (int e = 0; e < E; ++e) by_pair[{edges[e].u, edges[e].v}].push_back(e);

  auto decoration_equal = [&](int a, int b) {
    return g.vertices[a].beta == g.vertices[b].beta && g.vertices[a].chi == g.vertices[b].chi &&
           g.vertices[a].n_marked == g.vertices[b].n_marked;
  };

  std::vector<GraphAut> result;
  std::vector<int> alpha(V, -1);
  std::vector<char> taken(V, 0);

  auto masks_of = [&](int u, int v) {
    std::vector<int> ms;
    auto it = by_pair.find({u, v});
    if (it != by_pair.end())
      for (int e : it->second) ms.push_back(edges[e].mask);
    std::sort(ms.begin(), ms.end());
    return ms;
  };

  std::function<void()> assign_vertices = [&] {
    int next = -1;
    for (int v = 0; v < V; ++v) {
      if (alpha[v] < 0) {
        next = v;
        break;
      }
    }
    if (next < 0) {
      // alpha complete: verify the edge matrix with masks, then enumerate
      // edge matchings per pair class and self-loop flips.
      for (const auto& [key, es] : by_pair) {
        int iu = std::min(alpha[key.u], alpha[key.v]);
        int iv = std::max(alpha[key.u], alpha[key.v]);
        if (masks_of(key.u, key.v) != masks_of(iu, iv)) return;
        (void)es;
      }
      std::vector<PairKey> classes;
      for (const auto& [key, es] : by_pair) {
        classes.push_back(key);
        (void)es;
      }
      // Per class: list of mask-preserving bijections.
      std::vector<std::vector<std::vector<int>>> choices(classes.size());
      for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& src = by_pair[classes[c]];
        int iu = std::min(alpha[classes[c].u], alpha[classes[c].v]);
        int iv = std::max(alpha[classes[c].u], alpha[classes[c].v]);
        const auto& dst = by_pair[{iu, iv}];
        std::vector<int> sm, dm;
        for (int e : src) sm.push_back(edges[e].mask);
        for (int e : dst) dm.push_back(edges[e].mask);
        mask_bijections(sm, dm, choices[c]);
        if (choices[c].empty()) return;
      }
      std::vector<int> loops;
      for (int e = 0; e < E; ++e)
        if (edges[e].u == edges[e].v) loops.push_back(e);

      std::vector<std::size_t> pick(classes.size(), 0);
      while (true) {
        std::vector<int> eperm(E, -1);
        for (std::size_t c = 0; c < classes.size(); ++c) {
          const auto& src = by_pair[classes[c]];
          int iu = std::min(alpha[classes[c].u], alpha[classes[c].v]);
          int iv = std::max(alpha[classes[c].u], alpha[classes[c].v]);
          const auto& dst = by_pair[{iu, iv}];
          const auto& bij = choices[c][pick[c]];
          for (std::size_t i = 0; i < src.size(); ++i) eperm[src[i]] = dst[bij[i]];
        }
        // Self-loop flip odometer: one bit per loop edge.
        const int nflips = (int)loops.size();
        for (int bits = 0; bits < (1 << nflips); ++bits) {
          GraphAut aut;
          aut.vertex_perm = alpha;
          aut.edge_perm = eperm;
          aut.half_edge_perm.assign(H, -1);
          aut.edge_flip.assign(E, 0);
          for (int e = 0; e < E; ++e) {
            const EdgeInfo& s = edges[e];
            const EdgeInfo& t = edges[eperm[e]];
            int a, b;  // images of s.h1, s.h2
            if (s.u != s.v) {
              if (g.pi[t.h1] == alpha[g.pi[s.h1]]) {
                a = t.h1;
                b = t.h2;
              } else {
                a = t.h2;
                b = t.h1;
              }
            } else {
              int li = (int)(std::find(loops.begin(), loops.end(), e) - loops.begin());
              bool fl = (bits >> li) & 1;
              a = fl ? t.h2 : t.h1;
              b = fl ? t.h1 : t.h2;
            }
            aut.half_edge_perm[s.h1] = a;
            aut.half_edge_perm[s.h2] = b;
            aut.edge_flip[e] = (a != t.h1);
          }
          aut.orientation_sign = 1;
          for (int e = 0; e < E; ++e)
            if (aut.edge_flip[e]) aut.orientation_sign = -aut.orientation_sign;
          result.push_back(std::move(aut));
        }
        // Advance the per-class odometer.
        std::size_t c = 0;
        for (; c < classes.size(); ++c) {
          if (++pick[c] < choices[c].size()) break;
          pick[c] = 0;
        }
        if (c == classes.size()) break;
      }
      return;
    }
    for (int w = 0; w < V; ++w) {
      if (taken[w] || !decoration_equal(next, w)) continue;
      // Prune: pairs among assigned vertices must match mask multisets.
      bool ok = true;
      alpha[next] = w;
      for (int p = 0; p <= next && ok; ++p) {
        if (alpha[p] < 0) continue;
        int su = std::min(p, next), sv = std::max(p, next);
        int iu = std::min(alpha[p], w), iv = std::max(alpha[p], w);
        if (masks_of(su, sv) != masks_of(iu, iv)) ok = false;
      }
      if (ok) {
        taken[w] = 1;
        assign_vertices();
        taken[w] = 0;
      }
      alpha[next] = -1;
    }
  };

  if (V == 0) {
    GraphAut id;
    id.orientation_sign = 1;
    result.push_back(id);
  } else {
    assign_vertices();
  }

  // Identity first for deterministic downstream use.
  std::vector<int> iota_v(V), iota_h(H);
  std::iota(iota_v.begin(), iota_v.end(), 0);
  std::iota(iota_h.begin(), iota_h.end(), 0);
  for (std::size_t i = 0; i < result.size(); ++i) {
    if (result[i].vertex_perm == iota_v && result[i].half_edge_perm == iota_h) {
      std::swap(result[0], result[i]);
      break;
    }
  }
  return result;
}

}  // namespace mch
