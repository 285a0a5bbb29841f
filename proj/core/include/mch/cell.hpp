#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mch/rational.hpp"

namespace mch {

// Renaming of edge slots together with per-edge reversal of the half edge
// order. Carries the orientation torsor sign (-1)^{#reversals}; slot
// permutation parity does not contribute.
struct EdgeRelabeling {
  std::vector<int> edge_perm;  // image slot of each edge
  std::vector<char> flip;     // half edge pair order reversal

  static EdgeRelabeling identity(int k);
  bool is_identity() const;
  int torsor_sign() const;

  // Composition acting right to left: (a.compose(b))(e) = a(b(e)).
  EdgeRelabeling compose(const EdgeRelabeling& inner) const;
};

// Product structure exposed for the forgetful checks: one curve homology
// class per half edge slot; strengthened means the class only depends on the
// edge, not on the half edge side.
struct ForgetfulData {
  bool factorizes = false;
  std::vector<std::vector<Rat>> classes;
  bool strengthened = false;
};

class Cell;
using CellPtr = std::shared_ptr<const Cell>;

struct WeightedCell {
  Rat coeff;
  CellPtr cell;
};
using CellList = std::vector<WeightedCell>;

// A geometric or formal generator with k ordered edge slots. Implementations
// must be immutable. Contracts:
//  - boundary() has dimension()-1 and the same edge slots; boundary of
//    boundary cancels exactly.
//  - diagonal_restriction(e) has dimension()-3, drops slot e and reindexes
//    higher slots down; throws transversality_error when the restriction is
//    not defined.
//  - relabel(r) returns the transported cell with its intrinsic orientation
//    sign only; the caller multiplies the torsor sign.
//  - key() determines equality of cells.
class Cell : public std::enable_shared_from_this<Cell> {
 public:
  virtual ~Cell() = default;
  virtual int dimension() const = 0;
  virtual int edge_slots() const = 0;
  virtual CellList boundary() const = 0;
  virtual CellList diagonal_restriction(int edge) const = 0;
  virtual WeightedCell relabel(const EdgeRelabeling& r) const = 0;
  virtual std::string key() const = 0;
  virtual ForgetfulData forgetful_data() const { return {}; }
};

}  // namespace mch
