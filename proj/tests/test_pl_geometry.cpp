#include <doctest.h>

#include "mch/fixtures.hpp"
#include "mch/pl_loop.hpp"

using namespace mch;

namespace {

Vec3 v3(std::int64_t x, std::int64_t y, std::int64_t z) { return Vec3{Rat(x), Rat(y), Rat(z)}; }

}  // namespace

TEST_CASE("segment intersection predicate") {
  CHECK(segments_intersect({v3(0, 0, 0), v3(2, 2, 0)}, {v3(0, 2, 0), v3(2, 0, 0)}));
  CHECK_FALSE(segments_intersect({v3(0, 0, 0), v3(1, 0, 0)}, {v3(0, 1, 0), v3(1, 1, 0)}));
  // Touching endpoints count as intersection.
  CHECK(segments_intersect({v3(0, 0, 0), v3(1, 1, 1)}, {v3(1, 1, 1), v3(2, 0, 0)}));
  // Collinear overlap.
  CHECK(segments_intersect({v3(0, 0, 0), v3(2, 0, 0)}, {v3(1, 0, 0), v3(3, 0, 0)}));
  // Skew lines miss.
  CHECK_FALSE(segments_intersect({v3(0, 0, 0), v3(1, 0, 0)}, {v3(0, 0, 1), v3(0, 1, 1)}));
}

TEST_CASE("segment distance is exact") {
  const SegClosest c = segment_closest({v3(0, 0, 0), v3(2, 0, 0)}, {v3(1, 1, 0), v3(1, 2, 0)});
  CHECK(c.dist2 == Rat(1));
  CHECK(c.alpha == rat(1, 2));
  CHECK(c.beta == Rat(0));
  CHECK(segment_dist2({v3(0, 0, 0), v3(1, 1, 0)}, {v3(0, 0, 3), v3(1, 1, 3)}) == Rat(9));
}

TEST_CASE("loop validation") {
  PLLoop bad;
  bad.vertices = {v3(0, 0, 0), v3(1, 0, 0)};
  CHECK_FALSE(validate_loop(bad, AmbientSpace::R3).empty());  // needs 3 vertices

  PLLoop tri;
  tri.vertices = {v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0)};
  CHECK(validate_loop(tri, AmbientSpace::R3).empty());
  CHECK(validate_loop(tri, AmbientSpace::T3).empty());  // empty means zero translations

  tri.translations = {{0, 0, 0}};
  CHECK_FALSE(validate_loop(tri, AmbientSpace::T3).empty());  // one entry per segment

  tri.translations = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  CHECK(validate_loop(tri, AmbientSpace::T3).empty());
  CHECK_FALSE(validate_loop(tri, AmbientSpace::R3).empty());  // translations forbidden
}

TEST_CASE("torus winding and lifts") {
  const PLLoop w = fixtures::winding_loop({2, -1, 3}, Vec3{rat(1, 2), rat(1, 2), rat(1, 2)});
  CHECK(validate_loop(w, AmbientSpace::T3).empty());
  CHECK(homology_class(w, AmbientSpace::T3) == std::vector<std::int64_t>{2, -1, 3});
  CHECK(total_translation(w) == IVec3{2, -1, 3});
  const auto segs = lift_segments(w);
  CHECK(segs.size() == w.vertices.size());
  // The lift ends at start + total translation.
  CHECK(segs.back().b == segs.front().a + v3(2, -1, 3));

  PLLoop flat;
  flat.vertices = {Vec3{rat(1, 8), rat(1, 8), rat(1, 8)}, Vec3{rat(3, 8), rat(1, 8), rat(1, 8)},
                   Vec3{rat(1, 8), rat(3, 8), rat(1, 8)}};
  flat.translations = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  CHECK(validate_loop(flat, AmbientSpace::T3).empty());
  CHECK(homology_class(flat, AmbientSpace::T3) == std::vector<std::int64_t>{0, 0, 0});
}

TEST_CASE("chains validate and report classes") {
  const NiceGenerator hopf = fixtures::hopf_pair();
  for (const OneChain& c : hopf.curves) {
    CHECK(validate_chain(c).empty());
    CHECK(homology_class(c).empty());  // euclidean ambient: trivial classes
  }
  CHECK(are_disjoint(hopf.curves[0], hopf.curves[1]));

  OneChain combo;
  combo.ambient = AmbientSpace::T3;
  combo.terms.push_back({rat(2), fixtures::winding_loop({1, 0, 0}, Vec3{rat(1, 3), rat(1, 3), rat(1, 3)})});
  combo.terms.push_back({rat(-1), fixtures::winding_loop({0, 1, 0}, Vec3{rat(2, 3), rat(2, 3), rat(2, 3)})});
  const auto cls = homology_class(combo);
  REQUIRE(cls.size() == 3);
  CHECK(cls[0] == Rat(2));
  CHECK(cls[1] == Rat(-1));
  CHECK(cls[2] == Rat(0));
}

TEST_CASE("torus disjointness checks deck translates") {
  PLLoop a = fixtures::winding_loop({1, 0, 0}, Vec3{rat(1, 2), rat(1, 2), rat(1, 2)});
  PLLoop b = fixtures::winding_loop({1, 0, 0}, Vec3{rat(1, 2), rat(1, 4), rat(1, 4)});
  CHECK(are_disjoint(a, b, AmbientSpace::T3));
  CHECK_FALSE(are_disjoint(a, a, AmbientSpace::T3));
}
