#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>

namespace bunpoly {

// All coefficients are exact arbitrary-precision integers. Betti numbers of
// the moduli spaces handled here overflow 64-bit range already for moderate
// (g, r); nothing in this library ever touches floating point.
using Int = boost::multiprecision::cpp_int;

// Thrown when an internal consistency assertion fails (e.g. a division that
// must be exact leaves a remainder). Distinct from std::invalid_argument,
// which reports inadmissible user input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int pow2(int e) {
    if (e < 0) throw std::invalid_argument("pow2: exponent must be >= 0");
    return Int(1) << e;
}

// Binomial coefficient C(n, k) as an exact integer.
inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // always exact: r is C(n-k+i, i) after this step
    }
    return r;
}

// Floor division for possibly negative numerators (C++ '/' truncates to zero).
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline bool coprime(int r, int d) { return std::gcd(r, d) == 1; }

}  // namespace bunpoly
