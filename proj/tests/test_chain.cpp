#include <doctest.h>

#include "builders.hpp"
#include "mch/chain.hpp"
#include "mch/sig_group.hpp"

using namespace mch;
using namespace mch::testsupport;

namespace {

MultiCurveChain second_chain(const SigKey& key, const Rat& coeff, const CellPtr& cell, int degree) {
  MultiCurveChain c;
  c.version = ChainVersion::Second;
  c.degree = degree;
  insert_second(c, key, coeff, cell);
  return c;
}

}  // namespace

TEST_CASE("chain arithmetic") {
  const CellPtr cell = synthetic(1, 2, {5}, {3});
  const SigKey key{1, {0}};
  MultiCurveChain a = second_chain(key, Rat(2), cell, 2);
  MultiCurveChain b = second_chain(key, Rat(3), cell, 2);
  const MultiCurveChain sum = chain_add(a, b);
  CHECK(sum.second_entries.at(key).size() == 1);
  CHECK(sum.second_entries.at(key).begin()->second.coeff == Rat(5));
  CHECK(chain_is_zero(chain_add(a, a, Rat(-1))));
  CHECK(chain_equal(chain_add(a, b), chain_add(b, a)));
  CHECK_FALSE(chain_equal(a, b));
  // Zero coefficients are dropped.
  CHECK(chain_is_zero(second_chain(key, Rat(0), cell, 2)));
}

TEST_CASE("structure validation") {
  const CellPtr cell = synthetic(2, 3, {5}, {3, 4});
  MultiCurveChain c = second_chain(SigKey{2, {1}}, Rat(1), cell, -1);  // 3 = -1 + 2*2 + 0
  CHECK(validate_chain_structure(c).empty());

  // Slot count must match the cell.
  MultiCurveChain wrong;
  wrong.version = ChainVersion::Second;
  CHECK_THROWS_AS(insert_second(wrong, SigKey{1, {0}}, Rat(1), cell), std::invalid_argument);
}

TEST_CASE("symmetrize is the invariant projector") {
  const CellPtr cell = synthetic(2, 4, {1, 2}, {10, 20});
  MultiCurveChain c = second_chain(SigKey{2, {0}}, Rat(1), cell, 4 - 4);
  const MultiCurveChain s = symmetrize(c);
  CHECK(is_symmetric(s));
  CHECK(chain_equal(symmetrize(s), s));
  CHECK_FALSE(chain_is_zero(s));

  // A cell fixed by a group element acting with sign -1 dies: equal tags
  // make the slot swap a stabilizer, and the swap reorders the b word.
  const CellPtr killed = synthetic(2, 4, {1, 2}, {7, 7});
  const MultiCurveChain z = symmetrize(second_chain(SigKey{2, {0}}, Rat(1), killed, 0));
  CHECK(chain_is_zero(z));
}

TEST_CASE("graph chains land on canonical entries") {
  MarkedGraph m;
  m.graph = theta();
  m.filtration = {{0}};

  MarkedGraph shuffled;
  shuffled.graph.vertex_ids = {5, 9};
  shuffled.graph.vertices = {vertex(1, 0), vertex(1, 0)};
  shuffled.graph.half_edge_labels = {14, 3, 8, 2};
  shuffled.graph.sigma = {1, 0, 3, 2};
  shuffled.graph.pi = {0, 1, 0, 1};
  shuffled.filtration = {{0}};

  const CellPtr cell = synthetic(2, 6, {1}, {4, 4});
  MultiCurveChain c;
  c.version = ChainVersion::First;
  c.degree = 1;
  insert_first(c, m, Rat(1), cell);
  CHECK(c.first_entries.size() == 1);
  insert_first(c, shuffled, Rat(1), cell);
  CHECK(c.first_entries.size() == 1);  // same isomorphism class, same entry

  MarkedGraph other = m;
  other.filtration = {{0, 1}};
  insert_first(c, other, Rat(1), cell);
  CHECK(c.first_entries.size() == 2);
}

TEST_CASE("empty filtrations normalize to the single empty level") {
  MarkedGraph bare;
  bare.graph = lollipop();
  MultiCurveChain c;
  c.version = ChainVersion::First;
  c.degree = 0;
  insert_first(c, bare, Rat(1), synthetic(1, 2, {}, {0}));
  REQUIRE(c.first_entries.size() == 1);
  CHECK(c.first_entries.begin()->second.marked.filtration == std::vector<std::vector<int>>{{}});
}
