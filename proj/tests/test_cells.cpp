#include <doctest.h>

#include <map>

#include "builders.hpp"
#include "mch/errors.hpp"
#include "mch/fixtures.hpp"
#include "mch/product_cell.hpp"
#include "mch/sig_group.hpp"
#include "mch/sweep_cell.hpp"
#include "mch/synthetic_cell.hpp"

using namespace mch;
using namespace mch::testsupport;

TEST_CASE("edge relabelings compose and carry the reversal sign") {
  EdgeRelabeling id = EdgeRelabeling::identity(3);
  CHECK(id.is_identity());
  CHECK(id.torsor_sign() == 1);

  EdgeRelabeling r;
  r.edge_perm = {1, 0, 2};
  r.flip = {1, 0, 0};
  CHECK(r.torsor_sign() == -1);

  EdgeRelabeling s;
  s.edge_perm = {2, 1, 0};
  s.flip = {1, 1, 0};
  CHECK(s.torsor_sign() == 1);

  const EdgeRelabeling rs = r.compose(s);
  // (r.compose(s))(e) = r(s(e)); flips add along the composite.
  CHECK(rs.edge_perm == std::vector<int>{2, 0, 1});
  CHECK(rs.torsor_sign() == r.torsor_sign() * s.torsor_sign());
}

TEST_CASE("signature group sizes and structure") {
  CHECK(signature_group_order(SigKey{3, {0}}) == 48);      // 2^3 * 3!
  CHECK(signature_group_order(SigKey{3, {1, 2}}) == 8);    // 2^3
  CHECK(signature_group_order(SigKey{4, {2}}) == 64);      // 2^4 * 2! * 2!
  CHECK(signature_group_order(SigKey{0, {0}}) == 1);

  const auto g = signature_group(SigKey{2, {1}});
  CHECK((Int)g.size() == signature_group_order(SigKey{2, {1}}));
  CHECK(g[0].is_identity());

  // Appending the full prefix does not change the group.
  const auto h = signature_group(SigKey{2, {1, 2}});
  REQUIRE(g.size() == h.size());
  for (size_t i = 0; i < g.size(); ++i) {
    CHECK(g[i].edge_perm == h[i].edge_perm);
    CHECK(g[i].flip == h[i].flip);
  }
}

TEST_CASE("signature validation") {
  CHECK(validate_signature(SigKey{3, {1, 2}}).empty());
  CHECK_FALSE(validate_signature(SigKey{3, {2, 1}}).empty());  // must be nondecreasing
  CHECK_FALSE(validate_signature(SigKey{3, {4}}).empty());     // out of range
  CHECK_FALSE(validate_signature(SigKey{3, {}}).empty());      // at least one entry
}

TEST_CASE("synthetic cells relabel with the word reordering sign") {
  const CellPtr c = synthetic(2, 5, {1, 4}, {10, 20});
  EdgeRelabeling swap;
  swap.edge_perm = {1, 0};
  swap.flip = {0, 0};
  const WeightedCell moved = c->relabel(swap);
  CHECK(moved.coeff == Rat(-1));  // both b factors present: odd reordering
  const auto* sc = dynamic_cast<const SyntheticCell*>(moved.cell.get());
  REQUIRE(sc != nullptr);
  CHECK(sc->data().tags == std::vector<std::int64_t>{20, 10});

  // With one absent b factor the reordering is even.
  const CellPtr d = synthetic(2, 5, {1}, {10, 20}, {1, 0});
  CHECK(d->relabel(swap).coeff == Rat(1));

  // Flips toggle the reversal bit without an intrinsic sign.
  EdgeRelabeling flip0 = EdgeRelabeling::identity(2);
  flip0.flip[0] = 1;
  const WeightedCell flipped = c->relabel(flip0);
  CHECK(flipped.coeff == Rat(1));
  CHECK(flipped.cell->key() != c->key());
  CHECK(flipped.cell->relabel(flip0).cell->key() == c->key());
}

TEST_CASE("synthetic boundary removes a factors with positional signs") {
  const CellPtr c = synthetic(1, 4, {3, 7}, {0});
  const CellList b = c->boundary();
  REQUIRE(b.size() == 2);
  CHECK(b[0].coeff == Rat(1));
  CHECK(b[1].coeff == Rat(-1));
  for (const auto& wc : b) CHECK(wc.cell->dimension() == 3);

  // Boundary of boundary cancels after collecting by key.
  std::map<std::string, Rat> acc;
  for (const auto& wc : b)
    for (const auto& inner : wc.cell->boundary()) acc[inner.cell->key()] += wc.coeff * inner.coeff;
  for (const auto& [key, coeff] : acc) CHECK(coeff == Rat(0));
}

TEST_CASE("product cells are closed and restrict to nothing when disjoint") {
  const NiceGenerator g = fixtures::hopf_pair();
  const auto cell = std::make_shared<ProductCurveCell>(g.ambient, g.curves);
  CHECK(cell->dimension() == 2);
  CHECK(cell->edge_slots() == 1);
  CHECK(cell->boundary().empty());
  CHECK(cell->diagonal_restriction(0).empty());

  // An intersecting pair has no transversal restriction.
  const auto bad = std::make_shared<ProductCurveCell>(
      g.ambient, std::vector<OneChain>{g.curves[0], g.curves[0]});
  CHECK_THROWS_AS((void)bad->diagonal_restriction(0), transversality_error);

  // Flip swaps the two curve factors of the edge: transposing two odd
  // dimensional factors costs -1, so the flip action net of the edge
  // orientation torsor is +1, matching the symmetry of the link.
  EdgeRelabeling flip = EdgeRelabeling::identity(1);
  flip.flip[0] = 1;
  const WeightedCell flipped = cell->relabel(flip);
  CHECK(flipped.coeff == Rat(-1));
  CHECK(flipped.cell->key() != cell->key());
  const WeightedCell twice = flipped.cell->relabel(flip);
  CHECK(twice.cell->key() == cell->key());
  CHECK(flipped.coeff * twice.coeff == Rat(1));
}

TEST_CASE("sweep cells bound the endpoint difference and restrict to jumps") {
  const auto sweep = std::make_shared<SweepCell>(fixtures::hopf_pass());
  CHECK(sweep->dimension() == 3);
  CHECK(sweep->edge_slots() == 1);

  const CellList b = sweep->boundary();
  REQUIRE(b.size() == 2);
  CHECK(b[0].coeff * b[1].coeff == Rat(-1));  // end minus start

  const CellList jumps = sweep->diagonal_restriction(0);
  REQUIRE(jumps.size() == 1);
  CHECK(jumps[0].coeff == Rat(1));  // single upward crossing
  CHECK(jumps[0].cell->dimension() == 0);
  CHECK(jumps[0].cell->edge_slots() == 0);
}
