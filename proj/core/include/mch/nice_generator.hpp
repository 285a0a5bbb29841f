#pragma once

#include <vector>

#include "mch/chain.hpp"
#include "mch/isotopy.hpp"
#include "mch/pl_loop.hpp"

namespace mch {

// Configuration generating the degree-0 homology: one closed curve chain per
// half edge, paired by an explicit fixed point free involution. Every paired
// couple must be disjoint and all curves must share one homology class.
struct NiceGenerator {
  AmbientSpace ambient = AmbientSpace::R3;
  std::vector<std::pair<int, int>> pairing;  // sigma orbits over 0..2k-1
  std::vector<OneChain> curves;              // size 2k
};

// Structural violations; empty means valid.
std::vector<std::string> validate_generator(const NiceGenerator& g);

// Common homology class of the generator's curves.
std::vector<Rat> generator_class(const NiceGenerator& g);

// Degree-0 nice cycle of the generator, slots reordered so pair j owns the
// half edge slots (2j, 2j+1).
MultiCurveChain to_nice_cycle(const NiceGenerator& g);

// A chain is nice when every entry sits at a length-one signature.
bool is_nice(const MultiCurveChain& c);

// Spreads one cell sum with k edge slots over all length-one signatures
// (j) with weight binomial(k, j), after projecting onto the invariants of
// the full slot symmetry group. In stored coordinates this binomial profile
// is exactly what the cycle condition forces on the length-one slots, and
// the empty prefix slot carries the plain sum.
MultiCurveChain spread_nice(int k, int degree, const CellSum& base);

// Degree-0 nice cycle of a product configuration: one closed curve chain
// per half edge slot, sigma pairs (2e, 2e+1) disjoint.
MultiCurveChain make_nice_cycle(const std::vector<OneChain>& curves, AmbientSpace ambient);

// Degree-1 nice chain swept by an isotopy of such configurations.
MultiCurveChain make_nice_sweep(const Isotopy& iso);

}  // namespace mch
