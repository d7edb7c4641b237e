#pragma once

// Reporting helpers: fixed-point decimal rendering of exact rationals and of
// a/N^{5/2}. Rendering is pure integer arithmetic, so reports are
// reproducible bit-for-bit.

#include "eslab/arith.hpp"

#include <cstdint>
#include <string>

namespace eslab {

inline Integer pow10(unsigned k) {
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) r *= 10;
    return r;
}

namespace detail {

inline std::string place_decimal_point(Integer scaled, unsigned digits) {
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string s = scaled.str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, 1, '.');
    if (neg) s.insert(0, 1, '-');
    return s;
}

}  // namespace detail

// Truncated decimal rendering of r with `digits` fractional digits.
inline std::string decimal_string(const Rational& r, unsigned digits = 20) {
    Integer scaled = (r.num() * pow10(digits)) / r.den();
    return detail::place_decimal_point(scaled, digits);
}

// floor(a * 10^digits / N^{5/2}) rendered as a decimal, via
// floor(sqrt((a 10^k)^2 / N^5)). Exact integer arithmetic throughout.
inline std::string ratio_over_n_five_halves(std::uint64_t a, std::uint64_t N, unsigned digits = 20) {
    Integer n(N);
    Integer n5 = n * n * n * n * n;
    Integer scaled_sq = (Integer(a) * pow10(digits));
    scaled_sq *= scaled_sq;
    return detail::place_decimal_point(isqrt(scaled_sq / n5), digits);
}

}  // namespace eslab
