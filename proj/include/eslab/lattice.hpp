#pragma once

// Exact lattice-point counting: a_N = |{(x,y,z) in [1,N]^3 : gcd(x,y)=1,
// 2(xy)^2 < z}| by brute force and by per-z slicing with Mobius inversion,
// plus the Euler totient sieve and its summatory function.

#include "eslab/arith.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace eslab {

struct TotientTable {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> phi;  // phi[n] for 1 <= n <= limit; phi[0] unused

    std::uint64_t operator()(std::uint64_t n) const { return phi[n]; }
};

// Linear sieve; O(X) time, no factorization per query.
inline TotientTable totient_sieve(std::uint64_t X) {
    if (X == 0) throw std::domain_error("totient_sieve: X must be >= 1");
    TotientTable t;
    t.limit = X;
    t.phi.assign(X + 1, 0);
    t.phi[1] = 1;
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= X; ++i) {
        if (t.phi[i] == 0) {
            t.phi[i] = i - 1;
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes) {
            if (p > X / i) break;
            if (i % p == 0) {
                t.phi[i * p] = t.phi[i] * p;
                break;
            }
            t.phi[i * p] = t.phi[i] * (p - 1);
        }
    }
    return t;
}

inline std::uint64_t totient_summatory(std::uint64_t X) {
    auto t = totient_sieve(X);
    std::uint64_t sum = 0;
    for (std::uint64_t n = 1; n <= X; ++n) sum += t.phi[n];
    return sum;
}

// B(z): largest m >= 0 with 2 m^2 < z. Float-free; z = 8 is the boundary case.
inline std::uint64_t threshold(std::uint64_t z) {
    if (z == 0) throw std::domain_error("threshold: z must be >= 1");
    std::uint64_t m = static_cast<std::uint64_t>(isqrt(Integer((z - 1) / 2)));
    while (2 * (m + 1) * (m + 1) < z) ++m;
    while (m > 0 && 2 * m * m >= z) --m;
    return m;
}

enum class LatticeMethod { brute, sliced };

struct LatticeReport {
    std::uint64_t N = 0;
    std::uint64_t a_N = 0;
    LatticeMethod method = LatticeMethod::brute;
};

inline LatticeReport count_lattice_brute(std::uint64_t N) {
    if (N == 0) throw std::domain_error("count_lattice_brute: N must be >= 1");
    std::uint64_t count = 0;
    for (std::uint64_t z = 1; z <= N; ++z) {
        std::uint64_t B = threshold(z);
        for (std::uint64_t x = 1; x <= B; ++x)
            for (std::uint64_t y = 1; x * y <= B; ++y)
                if (std::gcd(x, y) == 1) ++count;
    }
    return LatticeReport{N, count, LatticeMethod::brute};
}

namespace detail {

// Mobius function on 1..n by sieve.
inline std::vector<int> mobius_table(std::uint64_t n) {
    std::vector<int> mu(n + 1, 1);
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<std::uint32_t>(i));
            mu[i] = -1;
        }
        for (std::uint32_t p : primes) {
            if (p > n / i) break;
            composite[i * p] = true;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = -mu[i];
        }
    }
    return mu;
}

// D(m) = #{(x,y) : xy <= m} = sum_{x<=m} floor(m/x).
inline std::uint64_t divisor_summatory(std::uint64_t m) {
    std::uint64_t s = 0;
    for (std::uint64_t x = 1; x <= m; ++x) s += m / x;
    return s;
}

// Coprime pairs (x,y) with xy <= B, by Mobius inversion over the square part.
inline std::uint64_t coprime_pairs_under_hyperbola(std::uint64_t B, const std::vector<int>& mu) {
    std::int64_t s = 0;
    for (std::uint64_t d = 1; d * d <= B; ++d)
        if (mu[d] != 0) s += mu[d] * static_cast<std::int64_t>(divisor_summatory(B / (d * d)));
    return static_cast<std::uint64_t>(s);
}

}  // namespace detail

inline LatticeReport count_lattice_sliced(std::uint64_t N) {
    if (N == 0) throw std::domain_error("count_lattice_sliced: N must be >= 1");
    std::uint64_t Bmax = threshold(N);
    auto mu = detail::mobius_table(std::max<std::uint64_t>(Bmax, 1));
    // cache per distinct B (B(z) is nondecreasing in z)
    std::vector<std::uint64_t> cache(Bmax + 1, 0);
    for (std::uint64_t B = 1; B <= Bmax; ++B)
        cache[B] = detail::coprime_pairs_under_hyperbola(B, mu);
    std::uint64_t count = 0;
    for (std::uint64_t z = 1; z <= N; ++z) count += cache[threshold(z)];
    return LatticeReport{N, count, LatticeMethod::sliced};
}

}  // namespace eslab
