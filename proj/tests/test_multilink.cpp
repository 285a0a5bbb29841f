#include <doctest.h>

#include <stdexcept>

#include "mch/differentials.hpp"
#include "mch/fixtures.hpp"
#include "mch/multilink.hpp"
#include "mch/nice_generator.hpp"

using namespace mch;

TEST_CASE("link products of the reference configurations") {
  CHECK(multilink(fixtures::hopf_pair()) == Rat(1));
  CHECK(multilink(fixtures::split_pair()) == Rat(0));
  CHECK(multilink(fixtures::clasp_pair()) == Rat(2));
  CHECK(multilink(fixtures::clasp_hopf_pair()) == Rat(2));

  // The chain level value agrees with the direct product.
  for (const NiceGenerator& g : {fixtures::hopf_pair(), fixtures::clasp_hopf_pair()})
    CHECK(multilink(to_nice_cycle(g)) == multilink(g));
}

TEST_CASE("a common nonzero class is rejected") {
  NiceGenerator g;
  g.ambient = AmbientSpace::T3;
  g.pairing = {{0, 1}};
  OneChain a, b;
  a.ambient = b.ambient = AmbientSpace::T3;
  a.terms.push_back({Rat(1), fixtures::winding_loop({1, 0, 0}, Vec3{rat(1, 2), rat(1, 2), rat(1, 2)})});
  b.terms.push_back({Rat(1), fixtures::winding_loop({1, 0, 0}, Vec3{rat(1, 2), rat(1, 4), rat(1, 4)})});
  g.curves = {a, b};
  REQUIRE(validate_generator(g).empty());
  CHECK_THROWS_AS(multilink(g), std::invalid_argument);
}

TEST_CASE("the track of a single pass jumps once") {
  const MultiCurveChain sweep = make_nice_sweep(fixtures::hopf_pass());
  const PointChain track = multilink_track(sweep);
  CHECK(track.degree == 1);
  CHECK(track.start == Rat(0));
  CHECK(track.end == Rat(1));
  REQUIRE(track.jumps.size() == 1);
  CHECK(track.jumps[0].jump == Rat(1));
  CHECK(rat_abs(track.jumps[0].t - rat(3, 4)) < rat(1, 1 << 20));
  CHECK(point_boundary(track) == Rat(0));
}

TEST_CASE("the track boundary equals the multilink of the differential") {
  for (const Isotopy& iso :
       {fixtures::hopf_pass(), fixtures::full_pass(), fixtures::pass_and_return()}) {
    const ChainMapCheck check = verify_chain_map(iso);
    CHECK(check.ok);
    CHECK(check.lhs == check.rhs);
  }
}

TEST_CASE("relation elements lie in the kernel") {
  for (const Isotopy& iso : {fixtures::hopf_pass(), fixtures::full_pass()}) {
    const MultiCurveChain rel = hnul_element(iso);
    CHECK(rel.degree == 0);
    CHECK(!chain_is_zero(rel));
    CHECK(multilink(rel) == Rat(0));
  }
  // A loop that returns to its start cancels exactly: the endpoint cycles
  // coincide and the two opposite jumps remove the same configuration.
  CHECK(chain_is_zero(hnul_element(fixtures::pass_and_return())));
}

TEST_CASE("direct product values") {
  const NiceGenerator hopf = fixtures::hopf_pair();
  CHECK(multilink_value({hopf.curves[0], hopf.curves[1]}, AmbientSpace::R3) == Rat(1));
  CHECK(multilink_value({}, AmbientSpace::R3) == Rat(1));
}
