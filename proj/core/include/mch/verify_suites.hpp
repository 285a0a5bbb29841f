#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace mch {

// One property suite run: seed-deterministic cases, exact pass/fail per
// case, wall time for the whole run. notes carries the first few failure
// descriptions verbatim.
struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  double seconds = 0.0;
  std::vector<std::string> notes;
  bool passed() const { return cases > 0 && failures == 0; }
};

nlohmann::json suite_to_json(const SuiteResult& r);

// Differential identities on random signature chains: the three pieces
// square to zero, the three anticommutators vanish, the total differential
// squares to zero. All equalities exact.
SuiteResult run_axioms_suite(std::uint64_t seed, int cases);

// The graph-to-signature pushforward commutes with the total differential
// on random graph chains; the graph-side differential also squares to zero.
SuiteResult run_first_map_suite(std::uint64_t seed, int cases);

// Exact projection linking on random disjoint null homologous pairs:
// matches the constructed value, integral for integer coefficients, within
// 0.01 of the quadrature estimate, negates under reversal, symmetric.
SuiteResult run_oracle_suite(std::uint64_t seed, int cases);

// Fixed torus checks: the in-cube pair links equally in both ambients, and
// winding fixtures report their declared homology classes.
SuiteResult run_torus_suite();

// Track boundary equals the multilink of the total differential for random
// transversal isotopies, exactly.
SuiteResult run_chain_map_suite(std::uint64_t seed, int cases);

// The relation element of each random isotopy lies in the kernel of
// multilink. Same seed and case count as the chain map suite replays the
// identical fixtures.
SuiteResult run_hnul_kernel_suite(std::uint64_t seed, int cases);

// nicify on random non-nice cycles: the repaired chain is nice, still a
// cycle, differs by the returned boundary, and has the same multilink.
SuiteResult run_nicify_suite(std::uint64_t seed, int cases);

}  // namespace mch
