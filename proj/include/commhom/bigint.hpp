#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

namespace commhom {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/* p-adic valuation of a nonzero integer. */
inline int valuation(Int x, const Int& p) {
    if (x == 0) return -1;
    if (x < 0) x = -x;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int pow2(unsigned n) { return Int(1) << n; }

inline Int binomial(unsigned a, unsigned b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    Int r = 1;
    for (unsigned i = 0; i < b; ++i) {
        r *= a - i;
        r /= i + 1;
    }
    return r;
}

}  // namespace commhom
