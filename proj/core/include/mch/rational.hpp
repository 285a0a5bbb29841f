#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mch {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p/q", "p", or "-p/q". Throws std::invalid_argument on malformed
// input or zero denominator.
Rat parse_rat(const std::string& s);

// Renders as "p/q" with q > 0 and gcd(p,q)=1, or "p" when q == 1.
std::string format_rat(const Rat& r);

double to_double(const Rat& r);

inline Rat rat(std::int64_t p, std::int64_t q = 1) { return Rat(Int(p), Int(q)); }

inline int sign_of(const Rat& r) { return r.sign(); }

Rat rat_abs(const Rat& r);

// Largest integer n with n <= r.
Int rat_floor(const Rat& r);

// binomial(n, k) as an exact integer; 0 when k < 0 or k > n.
Int binomial(std::int64_t n, std::int64_t k);

}  // namespace mch
