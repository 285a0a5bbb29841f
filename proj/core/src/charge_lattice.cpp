#include "mch/charge_lattice.hpp"

#include <stdexcept>

namespace mch {

void ChargeLattice::validate() const {
  if (rank < 0) throw std::invalid_argument("lattice rank must be nonnegative");
  if ((int)omega.size() != rank)
    throw std::invalid_argument("omega length does not match rank");
  if ((int)norm_weights.size() != rank)
    throw std::invalid_argument("norm_weights length does not match rank");
  for (const auto& w : norm_weights)
    if (w <= 0) throw std::invalid_argument("norm weights must be strictly positive");
  for (const auto& row : boundary_matrix)
    if ((int)row.size() != rank)
      throw std::invalid_argument("boundary matrix row length does not match rank");
}

Rat ChargeLattice::omega_of(const BetaVec& x) const {
  if ((int)x.size() != rank) throw std::invalid_argument("charge vector length mismatch");
  Rat s = 0;
  for (int i = 0; i < rank; ++i) s += omega[i] * x[i];
  return s;
}

Rat ChargeLattice::norm_of(const BetaVec& x) const {
  if ((int)x.size() != rank) throw std::invalid_argument("charge vector length mismatch");
  Rat s = 0;
  for (int i = 0; i < rank; ++i) s += norm_weights[i] * (x[i] < 0 ? -x[i] : x[i]);
  return s;
}

std::vector<std::int64_t> ChargeLattice::boundary_of(const BetaVec& x) const {
  std::vector<std::int64_t> out(boundary_matrix.size(), 0);
  for (size_t r = 0; r < boundary_matrix.size(); ++r)
    for (int i = 0; i < rank; ++i) out[r] += boundary_matrix[r][i] * x[i];
  return out;
}

bool ChargeLattice::admissible(const BetaVec& x, const Rat& C) const {
  return norm_of(x) <= C * omega_of(x);
}

bool is_zero(const BetaVec& x) {
  for (auto v : x)
    if (v != 0) return false;
  return true;
}

BetaVec add(const BetaVec& a, const BetaVec& b) {
  BetaVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace mch
