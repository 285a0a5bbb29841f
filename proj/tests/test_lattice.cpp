#include <doctest.h>

#include "mch/charge_lattice.hpp"
#include "mch/errors.hpp"
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

}  // namespace

TEST_CASE("lattice forms and admissibility") {
  ChargeLattice lat;
  lat.rank = 2;
  lat.boundary_matrix = {{1, -1}};
  lat.omega = {Rat(1), rat(1, 2)};
  lat.norm_weights = {Rat(1), Rat(2)};
  lat.validate();
  CHECK(lat.omega_of({2, 2}) == Rat(3));
  CHECK(lat.norm_of({-1, 2}) == Rat(5));
  CHECK(lat.boundary_of({3, 1}) == std::vector<std::int64_t>{2});
  CHECK(lat.admissible({1, 0}, Rat(1)));          // norm 1 <= omega 1
  CHECK_FALSE(lat.admissible({0, 1}, Rat(1)));    // norm 2 > omega 1/2
  CHECK(lat.admissible({0, 1}, Rat(4)));
  CHECK(is_zero(BetaVec{0, 0}));
  CHECK(add(BetaVec{1, 2}, BetaVec{3, -2}) == BetaVec{4, 0});
}

TEST_CASE("lattice validation failures") {
  ChargeLattice bad = unit_lattice();
  bad.norm_weights = {Rat(0)};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = unit_lattice();
  bad.omega = {Rat(1), Rat(1)};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("degenerate lattice is rejected by the enumeration bounds") {
  ChargeLattice bad = unit_lattice();
  bad.norm_weights = {Rat(-1)};
  CHECK_THROWS_AS(enumeration_bounds(bad, {1}, 1, Rat(1)), degenerate_lattice_error);
}

TEST_CASE("enumeration bounds for the unit lattice") {
  const EnumerationBounds b = enumeration_bounds(unit_lattice(), {3}, 1, Rat(1));
  CHECK(b.omega_beta == Rat(3));
  CHECK(b.min_omega == Rat(1));
  CHECK(b.max_charged == 3);
  CHECK(b.max_uncharged == 4);
  CHECK(b.max_vertices == 7);
  CHECK(b.max_edges == 6);
  // The admissible set holds the nonzero charges up to omega(beta).
  CHECK(b.admissible.size() == 3);
}
