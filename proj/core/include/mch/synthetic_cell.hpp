#pragma once

#include <cstdint>

#include "mch/cell.hpp"

namespace mch {

// Formal generator used to exercise the chain complex algebra: an exterior
// monomial a_{S} wedge b_{T} with the a factors first. Each edge slot carries
// an integer tag (permuted by relabelings; distinct tags make the slot action
// free) and a reversal bit (toggled by flips).
//  - boundary removes one a factor with its positional sign.
//  - the diagonal restriction at edge e removes the b factor of e with its
//    positional sign times (-1)^{reversal bit}, and drops the slot; it is
//    zero when b_e is absent.
//  - relabeling reorders the b word: the intrinsic sign is the parity of that
//    reordering; flips contribute no intrinsic sign.
class SyntheticCell : public Cell {
 public:
  struct Data {
    int k = 0;
    int dim = 0;
    int flavor = 0;
    std::vector<int> a_gens;           // strictly increasing formal ids
    std::vector<char> b_present;       // size k
    std::vector<std::int64_t> tags;    // size k
    std::vector<char> flips;           // size k

    // Forgetful metadata, empty classes when not declared.
    bool forgetful = false;
    std::vector<std::vector<Rat>> classes;  // size 2k when forgetful
    bool strengthened = false;
  };

  explicit SyntheticCell(Data d);

  int dimension() const override { return d_.dim; }
  int edge_slots() const override { return d_.k; }
  CellList boundary() const override;
  CellList diagonal_restriction(int edge) const override;
  WeightedCell relabel(const EdgeRelabeling& r) const override;
  std::string key() const override;
  ForgetfulData forgetful_data() const override;

  const Data& data() const { return d_; }

 private:
  Data d_;
};

}  // namespace mch
