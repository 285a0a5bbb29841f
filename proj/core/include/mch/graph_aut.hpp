#pragma once

#include <vector>

#include "mch/decorated_graph.hpp"

namespace mch {

// Automorphism of a marked graph: compatible vertex and half-edge
// permutations preserving sigma, pi, decorations, and each filtration set
// setwise. edge_perm is the induced permutation of edge indices;
// orientation_sign = (-1)^{#edges whose reference half-edge order reverses},
// where the reference order of an edge is (min half-edge, max half-edge).
struct GraphAut {
  std::vector<int> vertex_perm;
  std::vector<int> half_edge_perm;
  std::vector<int> edge_perm;
  std::vector<char> edge_flip;  // per source edge index
  int orientation_sign = 1;
};

// Full automorphism group, identity first. Closed under composition and
// inverse; orientation_sign is a homomorphism to {+1,-1}.
std::vector<GraphAut> automorphism_group(const MarkedGraph& m);

}  // namespace mch
