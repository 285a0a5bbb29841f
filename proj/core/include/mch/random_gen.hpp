#pragma once

#include <random>
#include <utility>

#include "mch/chain.hpp"
#include "mch/isotopy.hpp"
#include "mch/nice_generator.hpp"
#include "mch/pl_loop.hpp"

namespace mch {

// Seed-deterministic fixture generators for the property suites. All
// geometry is produced by exact rational transformations of hand-checked
// configurations, so expected invariants are known without recomputation.

// Signature chain of formal cells, symmetrized; k <= max_k, filtration
// length <= max_l + 1, degree <= max_d.
MultiCurveChain random_second_chain(std::mt19937_64& rng, int max_k, int max_l, int max_d);

// Graph chain of formal cells over small random decorated graphs.
MultiCurveChain random_first_chain(std::mt19937_64& rng);

// Disjoint pair of null homologous curve chains with a known exact linking
// number (unimodular images and subdivisions of the library pairs).
struct LinkedPair {
  OneChain a, b;
  Rat expected_link;
};
LinkedPair random_disjoint_pair(std::mt19937_64& rng);

// Transversal isotopy with at most five certified crossings; pairs beyond
// the moving one are static and far apart. max_k in [1,3].
Isotopy random_isotopy(std::mt19937_64& rng, int max_k);

// Non-nice degree-0 cycle: a nice cycle plus the total differential of a
// sweep witness supported on one length-one slot.
struct NicifyFixture {
  MultiCurveChain z;          // the cycle to repair
  MultiCurveChain nice_part;  // its nice summand, for invariant comparison
};
NicifyFixture random_nicify_input(std::mt19937_64& rng, int max_k);

}  // namespace mch
