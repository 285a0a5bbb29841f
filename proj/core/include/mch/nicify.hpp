#pragma once

#include "mch/chain.hpp"

namespace mch {

struct NicifyResult {
  MultiCurveChain bounding;  // degree 1
  MultiCurveChain nice;      // the input plus the total differential of bounding
};

// Moves a degree-0 cycle to a nice representative of its homology class:
// nice = z + boundary_hat(bounding) with no entries above filtration length
// one. Works level by level, descending in the slot count: the bounding
// chain at level k copies the (j, k) entries of the current chain to the
// length-one slots (j), which cancels the whole length-two layer by the
// cocycle identities of the cycle condition.
//
// Requirements: signature chain, degree 0, exact cycle, entries with at most
// two signature levels (the cell model has no higher cells in degree 0), at
// most 3 edge slots. Throws std::runtime_error when the bounding chain is
// not transversal to the diagonals its new slots require; repairing that
// needs two-parameter families outside this cell model.
NicifyResult nicify(const MultiCurveChain& z);

}  // namespace mch
