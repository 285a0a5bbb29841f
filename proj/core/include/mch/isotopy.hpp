#pragma once

#include <string>
#include <vector>

#include "mch/pl_loop.hpp"

namespace mch {

// Piecewise linear movie of a curve configuration: one chain per half edge,
// keyframed at rational times with linear vertex motion in between. Loop
// combinatorics (term coefficients, vertex counts, deck translations) are
// constant; only vertex positions move.
struct Isotopy {
  AmbientSpace ambient = AmbientSpace::R3;
  std::vector<Rat> times;                     // 0 = t_0 < ... < t_m = 1
  std::vector<std::vector<OneChain>> frames;  // frames[i][h]: half edge h at times[i]

  int num_half_edges() const { return frames.empty() ? 0 : static_cast<int>(frames[0].size()); }
};

std::vector<std::string> validate_isotopy(const Isotopy& iso);

// Configuration at time t in [0, 1], by linear interpolation inside the
// surrounding keyframe interval. Throws std::invalid_argument outside [0, 1].
std::vector<OneChain> frame_at(const Isotopy& iso, const Rat& t);

// Upper bound for the euclidean speed of any vertex of half edge h: the
// maximum over keyframe intervals of the l1 displacement over the time step.
Rat max_speed_l1(const Isotopy& iso, int half_edge);

}  // namespace mch
