#pragma once

#include <vector>

#include "mch/chain.hpp"
#include "mch/isotopy.hpp"
#include "mch/nice_generator.hpp"
#include "mch/pl_loop.hpp"

namespace mch {

// Chains on the point. Degree zero is a number. Degree one is a piecewise
// constant track on [0,1]; its boundary is the endpoint difference minus the
// accumulated jumps (each jump is the value after minus the value before).
struct PointChain {
  int degree = 0;
  Rat value;  // degree 0
  Rat start;  // degree 1 from here on
  Rat end;
  struct Jump {
    Rat t;
    Rat jump;
  };
  std::vector<Jump> jumps;
};

Rat point_boundary(const PointChain& p);

// Product of the pairwise linking numbers over the sigma pairs of one
// configuration; one for the empty configuration.
Rat multilink_value(const std::vector<OneChain>& curves, AmbientSpace ambient);

// Reads the empty prefix slot of every k of a nice degree-0 chain of curve
// products and sums the coefficient-weighted link products.
Rat multilink(const MultiCurveChain& z);

// Product of the pairwise linking numbers of a valid generator whose class
// vanishes rationally.
Rat multilink(const NiceGenerator& g);

// Track of the link product along a nice degree-1 chain of sweeps, with one
// certified jump per crossing event.
PointChain multilink_track(const MultiCurveChain& b);

// Relation element of a transversal isotopy: endpoint configurations with
// opposite signs plus, for every certified crossing, the configuration with
// the crossing pair removed, weighted by minus the chain-level linking jump.
// Lies in the kernel of multilink.
MultiCurveChain hnul_element(const Isotopy& iso);

// Exact identity: the point boundary of the track of the swept nice chain
// equals the multilink of its total differential.
struct ChainMapCheck {
  Rat lhs;  // point_boundary(multilink_track(sweep))
  Rat rhs;  // multilink(boundary_hat(sweep))
  bool ok = false;
};
ChainMapCheck verify_chain_map(const Isotopy& iso);

}  // namespace mch
