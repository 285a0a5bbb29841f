#pragma once

#include <utility>
#include <vector>

#include "mch/isotopy.hpp"

namespace mch {

// Straight-line isotopy separating sigma-paired curve configurations: frame 0
// is the input; frame 1 translates the second half edge of every intersecting
// pair by a small deterministic offset, halving the magnitude until the pair
// is exactly disjoint (at most 32 attempts per pair, then
// transversality_error). Untouched half edges stay fixed.
Isotopy perturb_off_diagonal(const std::vector<OneChain>& config,
                             const std::vector<std::pair<int, int>>& sigma_pairs,
                             const Rat& epsilon);

}  // namespace mch
