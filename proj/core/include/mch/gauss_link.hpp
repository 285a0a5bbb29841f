#pragma once

#include "mch/pl_loop.hpp"

namespace mch {

// Floating point Gauss double integral for the linking number, used as an
// independent cross-check of the exact combinatorial computation. Adaptive
// Gauss-Legendre quadrature per segment pair; the result approximates an
// integer to roughly the requested tolerance.
double gauss_linking_number(const PLLoop& a, const PLLoop& b, AmbientSpace ambient,
                            double tol = 1e-3);

}  // namespace mch
