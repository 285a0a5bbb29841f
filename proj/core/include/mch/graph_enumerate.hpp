#pragma once

#include <cstdint>
#include <vector>

#include "mch/charge_lattice.hpp"
#include "mch/decorated_graph.hpp"
#include "mch/rational.hpp"

namespace mch {

// Finiteness data computed from the lattice before enumeration starts.
struct EnumerationBounds {
  std::vector<BetaVec> admissible;  // nonzero x with ||x|| <= C*omega(x), omega(x) <= omega(beta)
  Rat omega_beta = 0;
  Rat min_omega = 0;        // minimum of omega over the admissible set (0 if the set is empty)
  int max_charged = 0;      // floor(omega_beta / min_omega)
  int max_uncharged = 0;    // 2 * max(0, max_charged - chi)
  int max_vertices = 0;
  int max_edges = 0;        // max_vertices - chi, clamped at 0
};

// Derives the admissible charge set and the vertex/edge caps that make the
// enumeration finite. Throws degenerate_lattice_error if the lattice fails
// validation, std::invalid_argument on malformed beta or C <= 0.
EnumerationBounds enumeration_bounds(const ChargeLattice& lattice, const BetaVec& beta,
                                     int chi, const Rat& C);

// All stable decorated graphs with total charge beta and Euler characteristic
// chi, one canonical representative per isomorphism class, sorted by canonical
// label. Unconnected graphs are included; the empty graph is not.
std::vector<DecoratedGraph> enumerate_graphs(const ChargeLattice& lattice, const BetaVec& beta,
                                             int chi, const Rat& C);

}  // namespace mch
