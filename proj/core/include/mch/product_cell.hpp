#pragma once

#include "mch/cell.hpp"
#include "mch/pl_loop.hpp"

namespace mch {

// Product of one closed curve chain per half edge slot; dimension 2k for k
// edges. Closed, so the boundary is empty. The diagonal restriction at an
// edge is empty when the paired curves are disjoint and undefined otherwise
// (a point intersection is never transversal for a 2k-dimensional product).
class ProductCurveCell : public Cell {
 public:
  // curves.size() must be even; slots 2e, 2e+1 belong to edge e.
  ProductCurveCell(AmbientSpace ambient, std::vector<OneChain> curves);

  int dimension() const override { return static_cast<int>(curves_.size()); }
  int edge_slots() const override { return static_cast<int>(curves_.size() / 2); }
  CellList boundary() const override { return {}; }
  CellList diagonal_restriction(int edge) const override;
  WeightedCell relabel(const EdgeRelabeling& r) const override;
  std::string key() const override;
  ForgetfulData forgetful_data() const override;

  AmbientSpace ambient() const { return ambient_; }
  const std::vector<OneChain>& curves() const { return curves_; }

 private:
  AmbientSpace ambient_;
  std::vector<OneChain> curves_;
};

// Serialization helper shared with the sweep cell key.
std::string chain_fingerprint(const OneChain& chain);

}  // namespace mch
