#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "builders.hpp"
#include "mch/chain.hpp"
#include "mch/curve_json.hpp"
#include "mch/errors.hpp"
#include "mch/fixtures.hpp"
#include "mch/graph_canonical.hpp"
#include "mch/graph_json.hpp"
#include "mch/isotopy.hpp"

using namespace mch;
using namespace mch::testsupport;
using nlohmann::json;

namespace {

json load_fixture(const std::string& name) {
  const std::string path = std::string(MCH_FIXTURES_DIR) + "/" + name;
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing fixture file ", path);
  std::stringstream ss;
  ss << in.rdbuf();
  return json::parse(ss.str());
}

}  // namespace

TEST_CASE("marked graph round trip") {
  MarkedGraph m;
  m.graph = theta();
  m.filtration = {{0}, {0, 1}};
  const json j = graph_to_json(m);
  const MarkedGraph back = marked_graph_from_json(j);
  CHECK(canonical_form(back).label == canonical_form(m).label);
  CHECK(graph_to_json(back) == j);

  const DecoratedGraph g = dumbbell();
  CHECK(canonical_form(graph_from_json(graph_to_json(g))).label == canonical_form(g).label);
  CHECK(graph_to_dot(g).find("1;1;0") != std::string::npos);
}

TEST_CASE("formal chain round trip") {
  SUBCASE("signature version") {
    MultiCurveChain c;
    c.degree = 1;
    insert_second(c, SigKey{2, {0, 1}}, rat(3, 2), synthetic(2, 6, {1, 4}, {5, 6}, {1, 0}, {0, 1}));
    insert_second(c, SigKey{1, {1}}, Rat(-2), synthetic(1, 3, {2}, {9}));
    c = symmetrize(c);
    const MultiCurveChain back = multicurve_from_json(multicurve_to_json(c));
    CHECK(chain_equal(back, c));
  }
  SUBCASE("graph version") {
    MultiCurveChain c;
    c.version = ChainVersion::First;
    c.degree = 1;
    MarkedGraph m;
    m.graph = theta();
    m.filtration = {{0}, {0, 1}};
    insert_first(c, m, rat(-1, 3), synthetic(2, 6, {1}, {5, 6}));
    c = symmetrize(c);
    const MultiCurveChain back = multicurve_from_json(multicurve_to_json(c));
    CHECK(chain_equal(back, c));
  }
}

TEST_CASE("curve chain round trip keeps exact coordinates") {
  OneChain combo;
  combo.ambient = AmbientSpace::T3;
  combo.terms.push_back(
      {rat(2, 3), fixtures::winding_loop({1, 0, 0}, Vec3{rat(1, 3), rat(1, 3), rat(1, 3)})});
  combo.terms.push_back(
      {Rat(-1), fixtures::winding_loop({0, 1, 0}, Vec3{rat(2, 3), rat(2, 3), rat(2, 3)})});
  const json j = chain_to_json(combo);
  const OneChain back = chain_from_json(j);
  CHECK(chain_to_json(back) == j);
  CHECK(back.terms[0].coeff == rat(2, 3));
  CHECK(back.terms[0].loop.vertices[0][0] == rat(1, 3));
}

TEST_CASE("generator and isotopy round trips") {
  const NiceGenerator g = fixtures::clasp_hopf_pair();
  const json jg = generator_to_json(g);
  CHECK(generator_to_json(generator_from_json(jg)) == jg);

  const Isotopy iso = fixtures::hopf_pass();
  const json ji = isotopy_to_json(iso);
  const Isotopy back = isotopy_from_json(ji);
  CHECK(isotopy_to_json(back) == ji);
  CHECK(validate_isotopy(back).empty());
}

TEST_CASE("shipped fixture files match the coded fixtures") {
  CHECK(load_fixture("hopf.json") == generator_to_json(fixtures::hopf_pair()));
  CHECK(load_fixture("split.json") == generator_to_json(fixtures::split_pair()));
  CHECK(load_fixture("clasp_hopf.json") == generator_to_json(fixtures::clasp_hopf_pair()));
  CHECK(load_fixture("hopf_pass.json") == isotopy_to_json(fixtures::hopf_pass()));
  CHECK(load_fixture("tangency.json") == isotopy_to_json(fixtures::tangency_isotopy()));
}

TEST_CASE("schema violations throw") {
  CHECK_THROWS_AS(chain_from_json(json{{"ambient", "R3"}}), std::invalid_argument);
  CHECK_THROWS_AS(chain_from_json(json{{"ambient", "K3"}, {"loops", json::array()}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(json{{"half_edges", json::array()}}), std::invalid_argument);

  // Intersecting pairs are a transversality failure, not a schema failure.
  json bad = generator_to_json(fixtures::hopf_pair());
  bad["curves"][1] = bad["curves"][0];
  CHECK_THROWS_AS(generator_from_json(bad), transversality_error);
}
