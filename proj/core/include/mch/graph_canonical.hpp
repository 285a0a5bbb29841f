#pragma once

#include <string>
#include <vector>

#include "mch/decorated_graph.hpp"

namespace mch {

// Canonical representative of a marked-graph isomorphism class.
// label is equal exactly for isomorphic inputs. The maps realize an
// isomorphism input -> canonical: canonical half-edges are numbered so edge
// j owns (2j, 2j+1) with 2j at the smaller canonical endpoint; edge_flip[e]
// records whether the input's reference half-edge order (min,max) reverses
// under the relabeling.
struct CanonicalForm {
  std::string label;
  MarkedGraph canonical;
  std::vector<int> vertex_map;     // input vertex index -> canonical index
  std::vector<int> half_edge_map;  // input half-edge index -> canonical index
  std::vector<int> edge_map;       // input edge index -> canonical edge index
  std::vector<char> edge_flip;
};

CanonicalForm canonical_form(const MarkedGraph& m);

// Convenience for plain graphs (empty filtration).
CanonicalForm canonical_form(const DecoratedGraph& g);

}  // namespace mch
