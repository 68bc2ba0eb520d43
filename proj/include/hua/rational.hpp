#pragma once

// Exact rational arithmetic for the sieve normalization J, the weights
// rho_d and the divisor sums T(q).  Denominators exceed 128 bits already
// around z ~ 50, hence the arbitrary-precision backend.

#include <boost/multiprecision/cpp_int.hpp>

#include "hua/arith.hpp"

namespace hua {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) {
    return static_cast<double>(r);
}

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace hua
