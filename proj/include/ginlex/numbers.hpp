#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ginlex {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// C(n, k) as an exact integer; 0 outside the triangle.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Number of monomials of degree d in q variables.
inline long long monomial_count(int q, int d) {
    if (d < 0) return 0;
    if (q == 0) return d == 0 ? 1 : 0;
    return static_cast<long long>(binomial(d + q - 1, q - 1));
}

}  // namespace ginlex
