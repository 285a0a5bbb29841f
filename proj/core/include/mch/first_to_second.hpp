#pragma once

#include "mch/chain.hpp"

namespace mch {

// Pushes a graph-indexed chain to the signature-indexed picture: edges are
// reordered so every filtration level becomes a prefix (levels in order,
// ascending edge index inside each block), the entry lands at the signature
// of prefix sizes, and the result is symmetrized. Commutes with the total
// differential.
MultiCurveChain first_to_second(const MultiCurveChain& c);

}  // namespace mch
