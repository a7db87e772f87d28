#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace springer {

// Exact scalars. mpq keeps fractions reduced with positive denominator,
// which is exactly the canonical form the rest of the library relies on.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace springer
