#include <doctest.h>

#include <memory>

#include "builders.hpp"
#include "mch/chain.hpp"
#include "mch/forgetful.hpp"
#include "mch/synthetic_cell.hpp"

using namespace mch;
using namespace mch::testsupport;

namespace {

CellPtr with_classes(int k, int dim, std::vector<std::vector<Rat>> classes, bool strengthened) {
  SyntheticCell::Data d;
  d.k = k;
  d.dim = dim;
  d.a_gens = {1};
  d.b_present.assign(k, 1);
  d.flips.assign(k, 0);
  for (int e = 0; e < k; ++e) d.tags.push_back(100 + e);
  d.forgetful = true;
  d.classes = std::move(classes);
  d.strengthened = strengthened;
  return std::make_shared<SyntheticCell>(std::move(d));
}

}  // namespace

TEST_CASE("class form of the forgetful check") {
  const std::vector<Rat> gamma = {rat(1, 2), Rat(-3)};
  const std::vector<Rat> other = {Rat(7), Rat(0)};

  MultiCurveChain c;
  c.degree = 0;
  SUBCASE("matching classes pass with the strong form") {
    insert_second(c, SigKey{2, {1}}, Rat(1), with_classes(2, 4, {gamma, gamma, other, other}, true));
    const ForgetfulReport rep = check_forgetful(c, gamma);
    CHECK(rep.ok);
    CHECK(rep.strengthened);
    CHECK(rep.errors.empty());
  }
  SUBCASE("a mismatched slot is reported") {
    insert_second(c, SigKey{2, {1}}, Rat(1), with_classes(2, 4, {gamma, other, other, other}, true));
    const ForgetfulReport rep = check_forgetful(c, gamma);
    CHECK(!rep.ok);
    REQUIRE(rep.errors.size() == 1);
    CHECK(rep.errors[0].find("slot 1") != std::string::npos);
  }
  SUBCASE("missing metadata fails on a checked slot") {
    insert_second(c, SigKey{1, {1}}, Rat(1), synthetic(1, 2, {1}, {5}));
    const ForgetfulReport rep = check_forgetful(c, gamma);
    CHECK(!rep.ok);
  }
  SUBCASE("empty prefixes are never checked") {
    c.degree = 1;
    insert_second(c, SigKey{1, {0}}, Rat(1), synthetic(1, 3, {1}, {5}));
    insert_second(c, SigKey{2, {0, 2}}, Rat(1), synthetic(2, 6, {1}, {5, 6}));
    const ForgetfulReport rep = check_forgetful(c, gamma);
    CHECK(rep.ok);
  }
  SUBCASE("declared weak metadata degrades the strong flag only") {
    insert_second(c, SigKey{1, {1}}, Rat(1), with_classes(1, 2, {gamma, gamma}, false));
    const ForgetfulReport rep = check_forgetful(c, gamma);
    CHECK(rep.ok);
    CHECK(!rep.strengthened);
  }
  SUBCASE("graph chains are rejected by the class form") {
    MultiCurveChain g;
    g.version = ChainVersion::First;
    CHECK_THROWS_AS(check_forgetful(g, gamma), std::invalid_argument);
  }
}

TEST_CASE("charge form of the forgetful check") {
  ChargeLattice lat;
  lat.rank = 1;
  lat.boundary_matrix = {{2}};
  lat.omega = {Rat(1)};
  lat.norm_weights = {Rat(1)};
  lat.validate();

  MarkedGraph m;
  m.graph = graph_of({vertex(2, 1), vertex(1, 0)}, {0, 1});
  m.filtration = {{0}};

  SUBCASE("per vertex boundary classes pass; unequal sides drop the strong flag") {
    MultiCurveChain c;
    c.version = ChainVersion::First;
    // Slot 2e is the lower half edge of edge e; classes follow the charges.
    insert_first(c, m, Rat(1), with_classes(1, 2, {{Rat(4)}, {Rat(2)}}, true));
    const ForgetfulReport rep = check_forgetful(c, lat);
    CHECK(rep.ok);
    CHECK(rep.errors.empty());
    CHECK(!rep.strengthened);
  }
  SUBCASE("equal charges keep the strong flag") {
    MarkedGraph t;
    t.graph = theta();
    t.filtration = {{0}, {0, 1}};
    MultiCurveChain c;
    c.version = ChainVersion::First;
    c.degree = -1;  // dim 4 = -1 + 2 * 2 + 1
    insert_first(c, t, Rat(1), with_classes(2, 4, {{Rat(2)}, {Rat(2)}, {Rat(9)}, {Rat(9)}}, true));
    const ForgetfulReport rep = check_forgetful(c, lat);
    CHECK(rep.ok);
    CHECK(rep.strengthened);
  }
  SUBCASE("a wrong charge class fails") {
    MultiCurveChain c;
    c.version = ChainVersion::First;
    insert_first(c, m, Rat(1), with_classes(1, 2, {{Rat(4)}, {Rat(5)}}, true));
    CHECK(!check_forgetful(c, lat).ok);
  }
  SUBCASE("an empty first level skips the entry") {
    MarkedGraph plain;
    plain.graph = dumbbell();
    MultiCurveChain c;
    c.version = ChainVersion::First;
    insert_first(c, plain, Rat(1), synthetic(1, 2, {1}, {5}));
    CHECK(check_forgetful(c, lat).ok);
  }
  SUBCASE("signature chains are rejected by the charge form") {
    MultiCurveChain c;
    CHECK_THROWS_AS(check_forgetful(c, lat), std::invalid_argument);
  }
}
