#pragma once

#include <cstdint>

#include "mch/pl_loop.hpp"

namespace mch {

// Exact linking number of two disjoint loops, each null-homologous (zero
// winding in T3). Computed by a generic projection with exact rational
// crossing tests; the over/under counts are cross-checked against each other.
// Throws std::invalid_argument on malformed or non-null-homologous input and
// transversality_error if the loops share a point.
std::int64_t linking_number(const PLLoop& a, const PLLoop& b, AmbientSpace ambient);

// Bilinear extension to rational one-chains.
Rat linking_number(const OneChain& a, const OneChain& b);

}  // namespace mch
