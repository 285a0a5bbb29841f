#pragma once

#include <vector>

#include "mch/decorated_graph.hpp"

namespace mch::testsupport {

// Independent ground-up enumerator for the rank-1 unit lattice (trivial
// boundary, omega = norm = identity) with C = 1: every stable decorated
// graph with total charge beta and Euler characteristic chi, one
// representative per isomorphism class. Enumerates decoration sequences and
// degree-constrained edge multisets directly, with its own
// refinement-plus-permutation canonicalizer; shares nothing with the
// library's enumeration path.
std::vector<DecoratedGraph> brute_force_graphs(int beta, int chi);

}  // namespace mch::testsupport
