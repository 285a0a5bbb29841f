#pragma once

#include <string>
#include <vector>

#include "mch/chain.hpp"
#include "mch/charge_lattice.hpp"

namespace mch {

struct ForgetfulReport {
  bool ok = true;
  // True when every checked cell also declares the stronger form: the loop
  // family attached to a half edge depends only on its edge (equal classes
  // on both sides of every forgotten edge).
  bool strengthened = true;
  std::vector<std::string> errors;
};

// Signature chains: every entry whose first prefix size is positive must
// carry factorization metadata whose class on each forgotten half edge slot
// equals gamma.
ForgetfulReport check_forgetful(const MultiCurveChain& c, const std::vector<Rat>& gamma);

// Graph chains: the class required on a forgotten half edge is the boundary
// of the charge of its vertex.
ForgetfulReport check_forgetful(const MultiCurveChain& c, const ChargeLattice& lattice);

}  // namespace mch
