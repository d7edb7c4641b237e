#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace eslab {

// Deterministic trial division; desk-scale inputs only.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// All primes p with lo <= p <= hi, ascending.
inline std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    if (hi < 2 || hi < lo) return out;
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    for (std::uint64_t p = std::max<std::uint64_t>(lo, 2); p <= hi; ++p)
        if (!composite[p]) out.push_back(p);
    return out;
}

// Smallest prime factor table for 0..n (spf[0] = spf[1] = 0).
inline std::vector<std::uint32_t> spf_table(std::uint32_t n) {
    std::vector<std::uint32_t> spf(n + 1, 0);
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (spf[i] == 0)
            for (std::uint64_t j = i; j <= n; j += i)
                if (spf[j] == 0) spf[j] = i;
    }
    return spf;
}

}  // namespace eslab
