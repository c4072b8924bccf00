#pragma once

// Exact arithmetic types used throughout: arbitrary-precision integers and
// reduced rationals (canonical form: gcd(num,den)=1, den>0). Floating point
// appears only in reports, never in identity checks.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace ffdiv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_from_u128(unsigned __int128 v) {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    const auto lo = static_cast<std::uint64_t>(v);
    Int r = hi;
    r <<= 64;
    r += lo;
    return r;
}

inline Int int_from_i128(__int128 v) {
    if (v < 0) return -int_from_u128(static_cast<unsigned __int128>(-v));
    return int_from_u128(static_cast<unsigned __int128>(v));
}

inline Int ipow(Int base, unsigned exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

// C(n, k) exactly; 0 when k < 0 or k > n.
inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

// "num/den" serialization, e.g. "26/3", "0/1"; keeps exactness across the
// file boundary.
inline std::string rat_to_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double rat_to_double(const Rat& r) {
    return static_cast<double>(r);
}

}  // namespace ffdiv
