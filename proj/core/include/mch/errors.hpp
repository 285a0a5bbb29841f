#pragma once

#include <stdexcept>
#include <string>

namespace mch {

// Lattice data on which the enumeration bounds cannot be established
// (non-positive norm weights, dimension mismatches).
struct degenerate_lattice_error : std::runtime_error {
  explicit degenerate_lattice_error(const std::string& what) : std::runtime_error(what) {}
};

// Tangential or otherwise non-generic intersection data: rejected, never
// silently perturbed.
struct transversality_error : std::runtime_error {
  explicit transversality_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mch
