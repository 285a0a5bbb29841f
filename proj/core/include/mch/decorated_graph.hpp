#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mch/charge_lattice.hpp"

namespace mch {

struct GraphVertex {
  BetaVec beta;
  int chi = 0;      // chi <= 1
  int n_marked = 0; // n >= 0
};

// Decorated graph: half-edges with a fixed-point-free involution sigma,
// half-edge-to-vertex map pi, and per-vertex decorations (beta, chi, n).
// Positions in half_edge_labels / vertex_ids are the internal indices; all
// structural arrays are index-based.
struct DecoratedGraph {
  std::vector<int> half_edge_labels;  // external labels (unique)
  std::vector<int> vertex_ids;        // external ids (unique)
  std::vector<int> sigma;             // involution on half-edge indices
  std::vector<int> pi;                // half-edge index -> vertex index
  std::vector<GraphVertex> vertices;

  int num_half_edges() const { return (int)sigma.size(); }
  int num_vertices() const { return (int)vertices.size(); }
  int num_edges() const { return num_half_edges() / 2; }

  // Edges as (min,max) half-edge index pairs, sorted; the position in this
  // list is the edge index used everywhere (filtrations, JSON, DOT).
  std::vector<std::pair<int, int>> edges() const;

  int valence(int v) const;
  std::vector<std::vector<int>> legs() const;  // half-edge indices per vertex

  BetaVec total_beta() const;
};

// Marked graph: decorated graph plus a nested edge filtration
// E_0 <= E_1 <= ... <= E_l (possibly empty list, l = -1). Sets are sorted
// lists of edge indices; inclusions need not be strict.
struct MarkedGraph {
  DecoratedGraph graph;
  std::vector<std::vector<int>> filtration;

  int l() const { return (int)filtration.size() - 1; }
};

// Collects structural violations; empty result means valid.
std::vector<std::string> validate_graph(const DecoratedGraph& g);
std::vector<std::string> validate_marked(const MarkedGraph& m);

std::int64_t euler_characteristic(const DecoratedGraph& g);

// A vertex is unstable iff beta_v = 0 and 2*chi_v - valence(v) >= 0.
bool vertex_unstable(const DecoratedGraph& g, int v);
bool is_stable(const DecoratedGraph& g);

// Contracts edge e (an index into edges()). Distinct endpoints merge with
// chi' = chi1 + chi2 - 1, beta' = beta1 + beta2, n' = n1 + n2; a self-edge
// keeps the vertex and lowers chi by 1. Preserves euler_characteristic and
// total beta. Remaining half-edges/vertices keep their external labels.
DecoratedGraph contract_edge(const DecoratedGraph& g, int e);

// Contraction of a marked graph; requires e not in the last filtration set.
// Surviving edges keep identity; filtration edge indices are remapped to the
// contracted graph's edge numbering.
MarkedGraph contract_edge(const MarkedGraph& m, int e);

// Deletes E_i from the filtration.
MarkedGraph remove_face(const MarkedGraph& m, int i);

}  // namespace mch
