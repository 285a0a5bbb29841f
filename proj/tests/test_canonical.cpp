#include <doctest.h>

#include <algorithm>

#include "builders.hpp"
#include "mch/graph_aut.hpp"
#include "mch/graph_canonical.hpp"

using namespace mch;
using namespace mch::testsupport;

namespace {

MarkedGraph marked(DecoratedGraph g, std::vector<std::vector<int>> filt = {}) {
  MarkedGraph m;
  m.graph = std::move(g);
  m.filtration = std::move(filt);
  return m;
}

// Relabels half edges by a permutation of positions, keeping the structure.
DecoratedGraph shuffled_dumbbell() {
  DecoratedGraph g;
  g.vertex_ids = {7, 3};
  g.vertices = {vertex(1, 0), vertex(1, 1)};  // dumbbell with swapped roles
  g.half_edge_labels = {11, 4};
  g.sigma = {1, 0};
  g.pi = {1, 0};
  return g;
}

}  // namespace

TEST_CASE("canonical labels agree across relabelings") {
  const CanonicalForm a = canonical_form(marked(dumbbell()));
  const CanonicalForm b = canonical_form(marked(shuffled_dumbbell()));
  CHECK(a.label == b.label);
  CHECK(validate_marked(a.canonical).empty());
}

TEST_CASE("canonical form is idempotent") {
  const CanonicalForm a = canonical_form(marked(theta(), {{0}, {0, 1}}));
  const CanonicalForm again = canonical_form(a.canonical);
  CHECK(a.label == again.label);
  for (int v = 0; v < (int)again.vertex_map.size(); ++v) CHECK(again.vertex_map[v] == v);
}

TEST_CASE("decorations separate labels") {
  DecoratedGraph g = dumbbell();
  DecoratedGraph h = dumbbell();
  h.vertices[0].chi = 0;
  CHECK(canonical_form(marked(g)).label != canonical_form(marked(h)).label);
  DecoratedGraph j = dumbbell();
  j.vertices[0].n_marked = 1;
  CHECK(canonical_form(marked(g)).label != canonical_form(marked(j)).label);
}

TEST_CASE("filtrations separate labels") {
  const CanonicalForm a = canonical_form(marked(theta(), {{0}}));
  const CanonicalForm b = canonical_form(marked(theta(), {{0, 1}}));
  const CanonicalForm c = canonical_form(marked(theta()));
  CHECK(a.label != b.label);
  CHECK(a.label != c.label);
}

TEST_CASE("parallel edge automorphisms have order four") {
  const auto auts = automorphism_group(marked(theta()));
  CHECK(auts.size() == 4);
  CHECK(auts[0].orientation_sign == 1);  // identity first
  for (const auto& a : auts) {
    CHECK(a.vertex_perm.size() == 2);
    CHECK((a.orientation_sign == 1 || a.orientation_sign == -1));
  }
}

TEST_CASE("half edge swap of a loop carries sign minus one") {
  const auto auts = automorphism_group(marked(lollipop()));
  REQUIRE(auts.size() == 2);
  CHECK(auts[0].orientation_sign * auts[1].orientation_sign == -1);
}

TEST_CASE("automorphisms are closed under composition and signs multiply") {
  const MarkedGraph m = marked(theta());
  const auto auts = automorphism_group(m);
  auto find = [&](const std::vector<int>& hperm) {
    for (const auto& a : auts)
      if (a.half_edge_perm == hperm) return true;
    return false;
  };
  for (const auto& a : auts)
    for (const auto& b : auts) {
      std::vector<int> comp(a.half_edge_perm.size());
      for (int h = 0; h < (int)comp.size(); ++h) comp[h] = a.half_edge_perm[b.half_edge_perm[h]];
      CHECK(find(comp));
    }
}

TEST_CASE("a filtration can break the symmetry") {
  // Marking one of the two parallel edges halves the group.
  const auto auts = automorphism_group(marked(theta(), {{0}}));
  CHECK(auts.size() == 2);
}
