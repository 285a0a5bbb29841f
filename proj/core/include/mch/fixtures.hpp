#pragma once

#include "mch/isotopy.hpp"
#include "mch/nice_generator.hpp"
#include "mch/pl_loop.hpp"

namespace mch {
namespace fixtures {

// Axis-aligned square loop of unit coefficient: center c, first in-plane
// axis u, second in-plane axis v, traversed c+u+v, c-u+v, c-u-v, c+u-v.
OneChain square_chain(const Vec3& center, const Vec3& u, const Vec3& v);

// Translates every loop of the chain.
OneChain translate_chain(const OneChain& chain, const Vec3& d);

// Pair with linking number +1: a square ring in the z=0 plane and a loop
// threading it once upward.
NiceGenerator hopf_pair();

// Distant pair, linking number 0.
NiceGenerator split_pair();

// Ring with a loop threading it twice upward, linking number +2.
NiceGenerator clasp_pair();

// k=2 generator: a hopf pair next to a clasp pair, multilink 2.
NiceGenerator clasp_hopf_pair();

// hopf_pair scaled by 1/8 into the open unit cube around (1/2,1/2,1/2),
// usable in both ambients with equal linking number.
NiceGenerator cube_hopf_pair(AmbientSpace ambient);

// Torus loop with winding vector w through the base point p.
PLLoop winding_loop(const IVec3& w, const Vec3& p);

// One pass: the threading loop slides from a split position into the hopf
// position; a single certified crossing, link track 0 -> 1.
Isotopy hopf_pass();

// Pass through and far beyond: four crossings, track 0,1,0,-1,0.
Isotopy full_pass();

// There and back again: two crossings with opposite jumps, track 0,1,0.
Isotopy pass_and_return();

// The moving loop touches the ring at one instant without crossing; every
// crossing search must fail with a transversality error.
Isotopy tangency_isotopy();

}  // namespace fixtures
}  // namespace mch
