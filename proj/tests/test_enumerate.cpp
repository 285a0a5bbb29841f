#include <doctest.h>

#include <set>
#include <string>

#include "brute_enum.hpp"
#include "mch/graph_canonical.hpp"
#include "mch/graph_enumerate.hpp"

using namespace mch;

namespace {

ChargeLattice unit_lattice() {
  ChargeLattice lat;
  lat.rank = 1;
  lat.omega = {Rat(1)};
  lat.norm_weights = {Rat(1)};
  return lat;
}

std::set<std::string> labels_of(const std::vector<DecoratedGraph>& graphs) {
  std::set<std::string> out;
  for (const auto& g : graphs) {
    MarkedGraph m;
    m.graph = g;
    out.insert(canonical_form(m).label);
  }
  return out;
}

}  // namespace

TEST_CASE("single stable graph for unit charge") {
  const auto graphs = enumerate_graphs(unit_lattice(), {1}, 1, Rat(1));
  REQUIRE(graphs.size() == 1);
  const DecoratedGraph& g = graphs[0];
  CHECK(g.num_vertices() == 1);
  CHECK(g.num_edges() == 0);
  CHECK(g.vertices[0].beta == BetaVec{1});
  CHECK(g.vertices[0].chi == 1);
  CHECK(g.vertices[0].n_marked == 0);
}

TEST_CASE("zero charge gives nothing at chi one") {
  CHECK(enumerate_graphs(unit_lattice(), {0}, 1, Rat(1)).empty());
}

TEST_CASE("output is stable, on charge, duplicate free") {
  const auto graphs = enumerate_graphs(unit_lattice(), {2}, 0, Rat(1));
  CHECK(!graphs.empty());
  std::set<std::string> seen;
  for (const auto& g : graphs) {
    CHECK(is_stable(g));
    CHECK(g.total_beta() == BetaVec{2});
    CHECK(euler_characteristic(g) == 0);
    MarkedGraph m;
    m.graph = g;
    CHECK(seen.insert(canonical_form(m).label).second);
  }
}

TEST_CASE("enumeration agrees with the ground up enumerator on small instances") {
  for (const auto& [beta, chi] : std::vector<std::pair<int, int>>{
           {0, 1}, {1, 1}, {2, 1}, {0, 0}, {1, 0}, {0, -1}}) {
    CAPTURE(beta);
    CAPTURE(chi);
    const auto fast = labels_of(enumerate_graphs(unit_lattice(), {beta}, chi, Rat(1)));
    const auto slow = labels_of(testsupport::brute_force_graphs(beta, chi));
    CHECK(fast == slow);
  }
}
