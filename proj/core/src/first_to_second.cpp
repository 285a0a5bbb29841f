#include "mch/first_to_second.hpp"

#include <stdexcept>
#include <vector>

namespace mch {

MultiCurveChain first_to_second(const MultiCurveChain& c) {
  if (c.version != ChainVersion::First)
    throw std::invalid_argument("first_to_second needs a graph chain");
  MultiCurveChain out;
  out.version = ChainVersion::Second;
  out.degree = c.degree;
  for (const auto& [label, entry] : c.first_entries) {
    const int k = entry.marked.graph.num_edges();
    // Slot order: filtration levels first (each level's new edges in
    // ascending index), unmarked edges last.
    std::vector<int> order;
    order.reserve(k);
    std::vector<char> taken(k, 0);
    SigKey key{k, {}};
    for (const auto& level : entry.marked.filtration) {
      for (int e : level)
        if (!taken[e]) {
          taken[e] = 1;
          order.push_back(e);
        }
      key.sig.push_back((int)level.size());
    }
    for (int e = 0; e < k; ++e)
      if (!taken[e]) order.push_back(e);

    EdgeRelabeling r = EdgeRelabeling::identity(k);
    for (int slot = 0; slot < k; ++slot) r.edge_perm[order[slot]] = slot;

    const CellSum moved = apply_relabeling(entry.cells, r);
    for (const auto& [ck, wc] : moved) insert_second(out, key, wc.coeff, wc.cell);
  }
  return symmetrize(out);
}

}  // namespace mch
