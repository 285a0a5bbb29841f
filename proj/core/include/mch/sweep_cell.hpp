#pragma once

#include <map>

#include "mch/cell.hpp"
#include "mch/isotopy.hpp"

namespace mch {

// Track of a curve configuration under an isotopy; dimension 2k + 1. The
// boundary is the end product minus the start product. The diagonal
// restriction at an edge collects the certified linking jumps of that sigma
// pair: each event contributes (jump times the two loop coefficients) times
// the product of the remaining curves sampled inside the event bracket.
class SweepCell : public Cell {
 public:
  explicit SweepCell(Isotopy iso);

  int dimension() const override { return 2 * edge_slots() + 1; }
  int edge_slots() const override { return iso_.num_half_edges() / 2; }
  CellList boundary() const override;
  CellList diagonal_restriction(int edge) const override;
  WeightedCell relabel(const EdgeRelabeling& r) const override;
  std::string key() const override;
  ForgetfulData forgetful_data() const override;

  const Isotopy& isotopy() const { return iso_; }

 private:
  Isotopy iso_;
  mutable std::map<int, CellList> restriction_cache_;
};

}  // namespace mch
