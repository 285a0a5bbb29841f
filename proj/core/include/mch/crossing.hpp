#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mch/isotopy.hpp"

namespace mch {

// One certified linking number jump between the curves of a sigma-paired half
// edge couple. The bracket [t_lo, t_hi] has width at most 2^-30, the linking
// number is constant outside all brackets, and jump = Link(t_hi) - Link(t_lo)
// is +-1 for the single loop pair (term_a, term_b).
struct CrossingEvent {
  int edge = 0;
  int term_a = 0;
  int term_b = 0;
  Rat t_lo, t_hi;
  std::int64_t jump = 0;
};

// Locates every linking jump of the isotopy between sigma-paired half edges,
// by bisection with exact linking evaluations and a speed-bound separation
// certificate on event-free intervals. Brackets of distinct events have
// disjoint interiors. Throws transversality_error when a jump cannot be
// isolated above width 2^-60 (tangency, simultaneous events).
std::vector<CrossingEvent> crossing_events(const Isotopy& iso,
                                           const std::vector<std::pair<int, int>>& sigma_pairs);

}  // namespace mch
