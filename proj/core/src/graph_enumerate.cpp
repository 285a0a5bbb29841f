#include "mch/graph_enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "mch/errors.hpp"
#include "mch/graph_canonical.hpp"

namespace mch {

namespace {

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

// Non-increasing lexicographic order on (chi, n) pairs, used to cut permuted
// decorations of interchangeable vertices before the canonical dedupe.
bool deco_le(int chi_a, int n_a, int chi_b, int n_b) {
  if (chi_a != chi_b) return chi_a < chi_b;
  return n_a <= n_b;
}

}  // namespace

EnumerationBounds enumeration_bounds(const ChargeLattice& lattice, const BetaVec& beta,
                                     int chi, const Rat& C) {
  try {
    lattice.validate();
  } catch (const std::invalid_argument& e) {
    throw degenerate_lattice_error(e.what());
  }
  if (static_cast<int>(beta.size()) != lattice.rank)
    throw std::invalid_argument("beta dimension does not match lattice rank");
  if (C <= 0) throw std::invalid_argument("energy constant C must be positive");

  EnumerationBounds out;
  out.omega_beta = lattice.omega_of(beta);

  // Box bound: ||x|| <= C*omega(x) <= C*omega(beta) gives |x_i| <= C*omega(beta)/w_i.
  std::vector<long long> box(lattice.rank, 0);
  if (out.omega_beta > 0) {
    Int cells = 1;
    for (int i = 0; i < lattice.rank; ++i) {
      box[i] = to_ll(rat_floor(C * out.omega_beta / lattice.norm_weights[i]));
      cells *= Int(2 * box[i] + 1);
      if (cells > 20'000'000) throw std::runtime_error("admissible charge box exceeds enumeration budget");
    }
    BetaVec x(lattice.rank, 0);
    std::function<void(int)> scan = [&](int i) {
      if (i == lattice.rank) {
        if (is_zero(x)) return;
        Rat w = lattice.omega_of(x);
        if (w > out.omega_beta) return;
        if (lattice.norm_of(x) > C * w) return;
        out.admissible.push_back(x);
        return;
      }
      for (long long v = -box[i]; v <= box[i]; ++v) {
        x[i] = v;
        scan(i + 1);
      }
      x[i] = 0;
    };
    scan(0);
  }

  std::sort(out.admissible.begin(), out.admissible.end(),
            [&](const BetaVec& a, const BetaVec& b) {
              Rat wa = lattice.omega_of(a), wb = lattice.omega_of(b);
              if (wa != wb) return wa < wb;
              return a < b;
            });

  if (!out.admissible.empty()) {
    out.min_omega = lattice.omega_of(out.admissible.front());
    out.max_charged = static_cast<int>(to_ll(rat_floor(out.omega_beta / out.min_omega)));
  }
  out.max_uncharged = 2 * std::max(0, out.max_charged - chi);
  out.max_vertices = out.max_charged + out.max_uncharged;
  out.max_edges = std::max(0, out.max_vertices - chi);
  return out;
}

std::vector<DecoratedGraph> enumerate_graphs(const ChargeLattice& lattice, const BetaVec& beta,
                                             int chi, const Rat& C) {
  EnumerationBounds bounds = enumeration_bounds(lattice, beta, chi, C);
  const auto& adm = bounds.admissible;
  std::vector<Rat> adm_omega(adm.size());
  for (size_t i = 0; i < adm.size(); ++i) adm_omega[i] = lattice.omega_of(adm[i]);

  std::map<std::string, DecoratedGraph> found;

  // Leaf of the innermost search: vertices fully decorated, edge multiset
  // fixed. Builds the graph and keeps one representative per canonical label.
  auto emit = [&](const std::vector<GraphVertex>& verts,
                  const std::vector<std::vector<int>>& edge_count) {
    DecoratedGraph g;
    int V = static_cast<int>(verts.size());
    g.vertices = verts;
    g.vertex_ids.resize(V);
    for (int v = 0; v < V; ++v) g.vertex_ids[v] = v;
    for (int i = 0; i < V; ++i)
      for (int j = i; j < V; ++j)
        for (int c = 0; c < edge_count[i][j]; ++c) {
          int h = static_cast<int>(g.half_edge_labels.size());
          g.half_edge_labels.push_back(h);
          g.half_edge_labels.push_back(h + 1);
          g.sigma.push_back(h + 1);
          g.sigma.push_back(h);
          g.pi.push_back(i);
          g.pi.push_back(j);
        }
    CanonicalForm cf = canonical_form(g);
    found.emplace(cf.label, cf.canonical.graph);
  };

  // Edge multiset search over unordered vertex pairs, pruned by the valence
  // still owed to not-yet-stable vertices.
  auto place_edges = [&](const std::vector<GraphVertex>& verts, int k) {
    int V = static_cast<int>(verts.size());
    std::vector<int> min_val(V, 0);
    for (int v = 0; v < V; ++v)
      if (is_zero(verts[v].beta)) min_val[v] = std::max(0, 2 * verts[v].chi + 1);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < V; ++i)
      for (int j = i; j < V; ++j) pairs.emplace_back(i, j);
    std::vector<int> val(V, 0);
    std::vector<std::vector<int>> edge_count(V, std::vector<int>(V, 0));

    std::function<void(size_t, int)> go = [&](size_t p, int k_rem) {
      long long deficit = 0;
      for (int v = 0; v < V; ++v) deficit += std::max(0, min_val[v] - val[v]);
      if (deficit > 2LL * k_rem) return;
      if (p == pairs.size()) {
        if (k_rem == 0) emit(verts, edge_count);
        return;
      }
      auto [i, j] = pairs[p];
      for (int c = 0; c <= k_rem; ++c) {
        if (c > 0) {
          edge_count[i][j] += 1;
          val[i] += 1;
          val[j] += 1;  // i == j adds 2 to the same vertex
        }
        go(p + 1, k_rem - c);
      }
      val[i] -= edge_count[i][j];
      val[j] -= edge_count[i][j];
      edge_count[i][j] = 0;
    };
    go(0, k);
  };

  // Decoration search: assign (chi_v, n_v) with sum(chi_v - n_v) = chi + k.
  auto place_decorations = [&](const std::vector<int>& charge_idx, int n_uncharged, int k) {
    int V = static_cast<int>(charge_idx.size()) + n_uncharged;
    int S = chi + k;
    int t_floor = S - (V - 1);
    int n_cap_twice = 2 * (static_cast<int>(charge_idx.size()) - chi) - n_uncharged;
    if (n_cap_twice < 0) return;
    int n_total_max = n_cap_twice / 2;

    std::vector<GraphVertex> verts(V);
    for (int v = 0; v < V; ++v) {
      if (v < static_cast<int>(charge_idx.size()))
        verts[v].beta = adm[charge_idx[v]];
      else
        verts[v].beta = BetaVec(lattice.rank, 0);
    }
    auto same_group = [&](int v) {
      if (v == 0) return false;
      return verts[v].beta == verts[v - 1].beta;
    };

    std::function<void(int, int, int)> assign = [&](int v, int s_rem, int n_rem) {
      if (v == V) {
        if (s_rem != 0) return;
        long long need = 0;
        for (const auto& vert : verts)
          if (is_zero(vert.beta)) need += std::max(0, 2 * vert.chi + 1);
        if (need > 2LL * k) return;
        place_edges(verts, k);
        return;
      }
      int m_left = V - v - 1;
      int t_lo = std::max(t_floor, s_rem - m_left);
      int t_hi = std::min(1, s_rem - m_left * t_floor);
      for (int t = t_lo; t <= t_hi; ++t) {
        int chi_hi = std::min(1, t + n_rem);
        for (int cv = t; cv <= chi_hi; ++cv) {
          int nv = cv - t;
          if (same_group(v) && !deco_le(cv, nv, verts[v - 1].chi, verts[v - 1].n_marked)) continue;
          verts[v].chi = cv;
          verts[v].n_marked = nv;
          assign(v + 1, s_rem - t, n_rem - nv);
        }
      }
    };
    assign(0, S, n_total_max);
  };

  // Outer loop: charged multiset summing to beta under the omega budget, then
  // the uncharged-vertex count, then the edge count k.
  auto expand_multiset = [&](const std::vector<int>& charge_idx) {
    int n_c = static_cast<int>(charge_idx.size());
    if (n_c - chi < 0) return;
    for (int n0 = 0; n0 <= 2 * (n_c - chi); ++n0) {
      int V = n_c + n0;
      if (V == 0) continue;
      for (int k = 0; k <= V - chi; ++k) place_decorations(charge_idx, n0, k);
    }
  };

  std::vector<int> charge_idx;
  BetaVec acc(lattice.rank, 0);
  std::function<void(size_t, Rat)> pick = [&](size_t start, Rat budget) {
    if (acc == beta) expand_multiset(charge_idx);
    for (size_t i = start; i < adm.size(); ++i) {
      if (adm_omega[i] > budget) break;
      charge_idx.push_back(static_cast<int>(i));
      for (int d = 0; d < lattice.rank; ++d) acc[d] += adm[i][d];
      pick(i, budget - adm_omega[i]);
      for (int d = 0; d < lattice.rank; ++d) acc[d] -= adm[i][d];
      charge_idx.pop_back();
    }
  };
  pick(0, bounds.omega_beta);

  std::vector<DecoratedGraph> out;
  out.reserve(found.size());
  for (auto& [label, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace mch
