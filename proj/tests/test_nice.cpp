#include <doctest.h>

#include <random>

#include "builders.hpp"
#include "mch/chain.hpp"
#include "mch/differentials.hpp"
#include "mch/errors.hpp"
#include "mch/fixtures.hpp"
#include "mch/multilink.hpp"
#include "mch/nice_generator.hpp"
#include "mch/nicify.hpp"
#include "mch/random_gen.hpp"

using namespace mch;
using namespace mch::testsupport;

namespace {

// Boundary-free synthetic base: no exterior factors, no diagonal support.
CellSum inert_base(int k, std::vector<std::int64_t> tags) {
  CellSum base;
  add_weighted(base, Rat(1),
               synthetic(k, 2 * k, {}, std::move(tags), std::vector<char>(k, 0)));
  return base;
}

}  // namespace

TEST_CASE("generator cycles are nice exact cycles") {
  for (const NiceGenerator& g : {fixtures::hopf_pair(), fixtures::clasp_hopf_pair()}) {
    const MultiCurveChain z = to_nice_cycle(g);
    CHECK(z.degree == 0);
    CHECK(is_nice(z));
    CHECK(is_symmetric(z));
    CHECK(validate_chain_structure(z).empty());
    CHECK(chain_is_zero(boundary_hat(z)));
  }
}

TEST_CASE("niceness reads the signature lengths") {
  MultiCurveChain c;
  insert_second(c, SigKey{1, {0}}, Rat(1), synthetic(1, 2, {}, {5}));
  CHECK(is_nice(c));
  MultiCurveChain d;
  d.degree = -1;
  insert_second(d, SigKey{1, {0, 1}}, Rat(1), synthetic(1, 2, {}, {5}));
  CHECK(!is_nice(d));
}

TEST_CASE("the binomial spread is exactly the cycle condition") {
  const MultiCurveChain spread = spread_nice(2, 0, inert_base(2, {5, 6}));
  CHECK(!chain_is_zero(spread));
  CHECK(is_nice(spread));
  CHECK(chain_is_zero(boundary_filtration(spread)));
  CHECK(chain_is_zero(boundary_hat(spread)));

  // The same cells on the plain slot alone are not a cycle.
  MultiCurveChain lone;
  lone.degree = 0;
  for (const auto& [key, wc] : inert_base(2, {5, 6}))
    insert_second(lone, SigKey{2, {0}}, wc.coeff, wc.cell);
  lone = symmetrize(lone);
  CHECK(!chain_is_zero(boundary_filtration(lone)));
}

TEST_CASE("cycle construction requires disjoint pairs") {
  const NiceGenerator hopf = fixtures::hopf_pair();
  CHECK_NOTHROW(make_nice_cycle({hopf.curves[0], hopf.curves[1]}, AmbientSpace::R3));
  CHECK_THROWS_AS(make_nice_cycle({hopf.curves[0], hopf.curves[0]}, AmbientSpace::R3),
                  transversality_error);
  CHECK_THROWS_AS(make_nice_cycle({hopf.curves[0]}, AmbientSpace::R3), std::invalid_argument);
}

TEST_CASE("nicify repairs a two level cycle") {
  std::mt19937_64 rng(7);
  const NicifyFixture fx = random_nicify_input(rng, 2);
  REQUIRE(!is_nice(fx.z));
  REQUIRE(chain_is_zero(boundary_hat(fx.z)));
  const NicifyResult res = nicify(fx.z);
  CHECK(is_nice(res.nice));
  CHECK(chain_is_zero(boundary_hat(res.nice)));
  CHECK(chain_equal(res.nice, chain_add(fx.z, boundary_hat(res.bounding))));
  CHECK(multilink(res.nice) == multilink(fx.nice_part));
}

TEST_CASE("nicify rejects inputs outside its scope") {
  SUBCASE("graph chains") {
    MultiCurveChain c;
    c.version = ChainVersion::First;
    CHECK_THROWS_AS(nicify(c), std::invalid_argument);
  }
  SUBCASE("nonzero degree") {
    MultiCurveChain c;
    c.degree = 1;
    CHECK_THROWS_AS(nicify(c), std::invalid_argument);
  }
  SUBCASE("non cycles") {
    MultiCurveChain lone;
    lone.degree = 0;
    insert_second(lone, SigKey{2, {0}}, Rat(1), synthetic(2, 4, {}, {5, 6}, {0, 0}));
    lone = symmetrize(lone);
    CHECK_THROWS_AS(nicify(lone), std::invalid_argument);
  }
  SUBCASE("too many edge slots") {
    const MultiCurveChain wide = spread_nice(4, 0, inert_base(4, {3, 4, 5, 6}));
    CHECK_THROWS_AS(nicify(wide), std::invalid_argument);
  }
}
