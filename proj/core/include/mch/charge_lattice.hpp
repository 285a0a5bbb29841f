#pragma once

#include <cstdint>
#include <vector>

#include "mch/rational.hpp"

namespace mch {

using BetaVec = std::vector<std::int64_t>;

// Charge lattice Z^rank with a boundary matrix into Z^b1, a linear area form
// omega, and a weighted l1 norm with strictly positive weights.
struct ChargeLattice {
  int rank = 0;
  std::vector<std::vector<std::int64_t>> boundary_matrix;  // b1 x rank
  std::vector<Rat> omega;                                  // length rank
  std::vector<Rat> norm_weights;                           // length rank, all > 0

  // Throws std::invalid_argument listing the first violation.
  void validate() const;

  Rat omega_of(const BetaVec& x) const;
  Rat norm_of(const BetaVec& x) const;  // sum_i w_i * |x_i|
  std::vector<std::int64_t> boundary_of(const BetaVec& x) const;

  // Support condition ||x|| <= C * omega(x).
  bool admissible(const BetaVec& x, const Rat& C) const;
};

bool is_zero(const BetaVec& x);
BetaVec add(const BetaVec& a, const BetaVec& b);

}  // namespace mch
