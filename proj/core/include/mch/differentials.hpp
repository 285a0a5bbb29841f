#pragma once

#include "mch/chain.hpp"

namespace mch {

// The three anticommuting pieces of the total differential and their
// combination. Each lowers the homological degree by one and maps invariant
// chains to invariant chains.

// Cellwise boundary; every cell stays in its slot.
MultiCurveChain boundary_cells(const MultiCurveChain& c);

// Diagonal part: restrict to the diagonal at every edge outside the top
// filtration level and contract that edge (drop the slot). Signature chains
// keep their signature with k-1 edges; graph chains move to the contracted
// marked graph.
MultiCurveChain boundary_diagonal(const MultiCurveChain& c);

// Filtration part: alternating sum over single level insertions, computed
// input-driven. Signature chains insert a value v at position i with weight
// binomial(hi-lo, v-lo); graph chains insert every edge set nested between
// the neighbouring levels with weight one.
MultiCurveChain boundary_filtration(const MultiCurveChain& c);

// Total differential: cells - diagonal - filtration. Squares to zero.
MultiCurveChain boundary_hat(const MultiCurveChain& c);

}  // namespace mch
