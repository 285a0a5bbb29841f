#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mch/rational.hpp"

namespace mch {

using Vec3 = std::array<Rat, 3>;
using IVec3 = std::array<std::int64_t, 3>;

enum class AmbientSpace { R3, T3 };

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(const Rat& s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline Rat dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline bool is_zero(const Vec3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

struct Seg {
  Vec3 a, b;
};

// Closed piecewise linear loop. Segment i runs from vertices[i] to
// vertices[(i+1) % n], shifted by the deck translation translations[i] in the
// torus case. translations must be empty for R3; in T3 they have one entry
// per segment, with empty meaning all zero.
struct PLLoop {
  std::vector<Vec3> vertices;
  std::vector<IVec3> translations;
};

// Formal rational combination of loops in one ambient space.
struct OneChain {
  AmbientSpace ambient = AmbientSpace::R3;
  struct Term {
    Rat coeff;
    PLLoop loop;
  };
  std::vector<Term> terms;
};

std::vector<std::string> validate_loop(const PLLoop& loop, AmbientSpace ambient);
std::vector<std::string> validate_chain(const OneChain& chain);

// Lift of the loop to the universal cover, one segment per edge; the lift
// ends at start + total_translation.
std::vector<Seg> lift_segments(const PLLoop& loop);
IVec3 total_translation(const PLLoop& loop);

// Winding vector: empty for R3 (trivial first homology), the total deck
// translation for T3.
std::vector<std::int64_t> homology_class(const PLLoop& loop, AmbientSpace ambient);
std::vector<Rat> homology_class(const OneChain& chain);

PLLoop translate(const PLLoop& loop, const Vec3& shift);

// Exact set intersection of closed segments.
bool segments_intersect(const Seg& s, const Seg& t);

// Exact squared euclidean distance between closed segments, with the
// minimizing parameters.
struct SegClosest {
  Rat dist2;
  Rat alpha, beta;  // closest points s.a + alpha*(s.b-s.a), t.a + beta*(t.b-t.a)
};
SegClosest segment_closest(const Seg& s, const Seg& t);
Rat segment_dist2(const Seg& s, const Seg& t);

// No common point in the ambient space; for T3 all deck translates are
// checked.
bool are_disjoint(const PLLoop& a, const PLLoop& b, AmbientSpace ambient);
bool are_disjoint(const OneChain& a, const OneChain& b);

}  // namespace mch
