#pragma once

// Arbitrary-precision integers and rationals.
//
// Rat is kept in canonical form by boost::multiprecision: numerator and
// denominator coprime, denominator positive.  All exact modules use Rat;
// no floating point enters through this header.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "hermop/errors.hpp"

namespace hermop {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// n! as an exact integer.
inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

// Integer power with a nonnegative exponent.
inline Rat rat_pow(const Rat& base, long e) {
    if (e < 0) {
        HERMOP_DOMAIN_CHECK(!base.is_zero(), "rat_pow: negative power of zero");
        Rat inv = Rat(1) / base;
        return rat_pow(inv, -e);
    }
    Rat acc = 1;
    Rat b = base;
    long k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

// Parses "a" or "a/b" with optional leading sign.  Throws domain_error on
// malformed input or zero denominator.
Rat rat_from_string(const std::string& text);

// Canonical form: "a" when the denominator is 1, else "a/b" with b > 0.
std::string rat_to_string(const Rat& r);

} // namespace hermop
