#include "brute_enum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace mch::testsupport {
namespace {

struct VType {
  int beta = 0;
  int chi = 0;
  int n = 0;
  int val = 0;
};

using EdgeList = std::vector<std::pair<int, int>>;  // (a,b), a <= b, lex sorted

std::string type_key(const VType& t) {
  return std::to_string(t.beta) + "," + std::to_string(t.chi) + "," + std::to_string(t.n) + "," +
         std::to_string(t.val);
}

// Refinement by decorations and colored adjacency, then minimization over
// the residual within-class permutations.
std::string brute_canonical(const std::vector<VType>& types, const EdgeList& edges) {
  const int V = (int)types.size();
  std::vector<std::string> color(V);
  for (int v = 0; v < V; ++v) color[v] = type_key(types[v]);
  for (int round = 0; round < V; ++round) {
    std::vector<std::string> next(V);
    for (int v = 0; v < V; ++v) {
      std::vector<std::string> adj;
      int loops = 0;
      for (const auto& [a, b] : edges) {
        if (a == v && b == v) ++loops;
        else if (a == v) adj.push_back(color[b]);
        else if (b == v) adj.push_back(color[a]);
      }
      std::sort(adj.begin(), adj.end());
      next[v] = color[v] + "#L" + std::to_string(loops);
      for (const auto& s : adj) next[v] += "|" + s;
    }
    std::set<std::string> before(color.begin(), color.end());
    std::set<std::string> after(next.begin(), next.end());
    color = std::move(next);
    if (after.size() == before.size()) break;
  }

  // Classes in canonical (color string) order.
  std::map<std::string, std::vector<int>> classes;
  for (int v = 0; v < V; ++v) classes[color[v]].push_back(v);
  long long perm_count = 1;
  for (const auto& [key, members] : classes) {
    long long f = 1;
    for (int i = 2; i <= (int)members.size(); ++i) f *= i;
    perm_count *= f;
    if (perm_count > 400000) throw std::runtime_error("brute canonical: symmetry class too large");
  }

  std::vector<std::vector<int>> member_lists;
  for (auto& [key, members] : classes) member_lists.push_back(members);

  std::string best;
  std::vector<int> order;
  // Enumerates the product of per-class permutations; each class list is
  // iterated through std::next_permutation from its sorted state.
  auto emit = [&]() {
    order.clear();
    for (const auto& members : member_lists) order.insert(order.end(), members.begin(), members.end());
    std::vector<int> newindex(V);
    for (int pos = 0; pos < V; ++pos) newindex[order[pos]] = pos;
    std::string s;
    for (int pos = 0; pos < V; ++pos) s += type_key(types[order[pos]]) + ";";
    EdgeList relabeled;
    for (const auto& [a, b] : edges) {
      const int x = newindex[a], y = newindex[b];
      relabeled.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(relabeled.begin(), relabeled.end());
    for (const auto& [a, b] : relabeled)
      s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (best.empty() || s < best) best = s;
  };
  // Odometer over the per-class permutations; classes after the advanced
  // position restart from their sorted state.
  std::vector<std::vector<int>> state = member_lists;
  while (true) {
    member_lists = state;
    emit();
    int i = (int)state.size() - 1;
    while (i >= 0 && !std::next_permutation(state[i].begin(), state[i].end())) --i;
    if (i < 0) break;
    for (int j = i + 1; j < (int)state.size(); ++j) std::sort(state[j].begin(), state[j].end());
  }
  return best;
}

DecoratedGraph build_graph(const std::vector<VType>& types, const EdgeList& edges) {
  DecoratedGraph g;
  const int V = (int)types.size();
  for (int v = 0; v < V; ++v) {
    g.vertex_ids.push_back(v);
    GraphVertex gv;
    gv.beta = BetaVec{types[v].beta};
    gv.chi = types[v].chi;
    gv.n_marked = types[v].n;
    g.vertices.push_back(gv);
  }
  for (int e = 0; e < (int)edges.size(); ++e) {
    g.half_edge_labels.push_back(2 * e);
    g.half_edge_labels.push_back(2 * e + 1);
    g.sigma.push_back(2 * e + 1);
    g.sigma.push_back(2 * e);
    g.pi.push_back(edges[e].first);
    g.pi.push_back(edges[e].second);
  }
  return g;
}

// All edge multisets realizing the remaining valences, generated in lex
// order (loops allowed).
void edge_rec(std::vector<int>& rem, int cur_v, int cur_w, EdgeList& acc,
              const std::vector<VType>& types, std::map<std::string, DecoratedGraph>& out) {
  int v = -1;
  for (int i = 0; i < (int)rem.size(); ++i)
    if (rem[i] > 0) {
      v = i;
      break;
    }
  if (v < 0) {
    out.emplace(brute_canonical(types, acc), build_graph(types, acc));
    return;
  }
  const int start = (v == cur_v) ? cur_w : v;
  for (int w = start; w < (int)rem.size(); ++w) {
    if (w == v) {
      if (rem[v] < 2) continue;
      rem[v] -= 2;
      acc.emplace_back(v, v);
      edge_rec(rem, v, w, acc, types, out);
      acc.pop_back();
      rem[v] += 2;
    } else {
      if (rem[w] < 1) continue;
      --rem[v];
      --rem[w];
      acc.emplace_back(v, w);
      edge_rec(rem, v, w, acc, types, out);
      acc.pop_back();
      ++rem[v];
      ++rem[w];
    }
  }
}

bool same_group(const std::vector<VType>& types, int i) {
  return i > 0 && types[i].beta == types[i - 1].beta;
}

// Decorations vertex by vertex: d = chi - n with sum chi_total + E, then n,
// then valence. Within equal-charge groups the (chi, n, val) tuples are
// non-increasing; permuted assignments are isomorphic.
void deco_rec(std::vector<VType>& types, int i, int need_rem, int val_rem,
              std::map<std::string, DecoratedGraph>& out) {
  const int V = (int)types.size();
  if (i == V) {
    if (need_rem != 0 || val_rem != 0) return;
    std::vector<int> rem(V);
    for (int v = 0; v < V; ++v) rem[v] = types[v].val;
    EdgeList acc;
    edge_rec(rem, -1, 0, acc, types, out);
    return;
  }
  const int m = V - i;
  // Each remaining vertex contributes d = chi - n at most 1, so d here is at
  // least need_rem - (m - 1); the last vertex must hit need_rem exactly.
  const int d_lo = need_rem - (m - 1);
  for (int d = 1; d >= d_lo; --d) {
    if (m == 1 && d != need_rem) continue;
    for (int n = 0; n <= 1 - d; ++n) {
      const int chi = d + n;
      for (int val = 0; val <= val_rem; ++val) {
        if (types[i].beta == 0 && 2 * chi - val >= 0) continue;  // stability
        types[i].chi = chi;
        types[i].n = n;
        types[i].val = val;
        if (same_group(types, i)) {
          const VType& p = types[i - 1];
          if (std::make_tuple(chi, n, val) > std::make_tuple(p.chi, p.n, p.val)) continue;
        }
        deco_rec(types, i + 1, need_rem - d, val_rem - val, out);
      }
    }
  }
}

// Non-increasing positive partitions of beta.
void partitions(int beta, int max_part, std::vector<int>& acc, std::vector<std::vector<int>>& out) {
  if (beta == 0) {
    out.push_back(acc);
    return;
  }
  for (int p = std::min(beta, max_part); p >= 1; --p) {
    acc.push_back(p);
    partitions(beta - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<DecoratedGraph> brute_force_graphs(int beta, int chi) {
  if (beta < 0) throw std::invalid_argument("brute_force_graphs: beta must be nonnegative");
  std::map<std::string, DecoratedGraph> out;
  std::vector<std::vector<int>> parts;
  std::vector<int> acc;
  partitions(beta, beta, acc, parts);
  for (const auto& charged : parts) {
    const int c = (int)charged.size();
    const int u_cap = 2 * std::max(0, c - chi) + 1;  // one beyond the derived bound
    for (int u = 0; u <= u_cap; ++u) {
      const int V = c + u;
      if (V == 0) continue;
      const int e_cap = std::max(0, V - chi + 1);  // one beyond the derived bound
      for (int E = 0; E <= e_cap; ++E) {
        const int need = chi + E;
        if (need > V) continue;
        std::vector<VType> types(V);
        for (int j = 0; j < c; ++j) types[j].beta = charged[j];
        deco_rec(types, 0, need, 2 * E, out);
      }
    }
  }
  std::vector<DecoratedGraph> result;
  for (auto& [key, g] : out) result.push_back(std::move(g));
  return result;
}

}  // namespace mch::testsupport
