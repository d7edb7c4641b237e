#pragma once

// Continued fractions of nonnegative rationals: expansion, convergents,
// complete quotients, exact error terms, the Legendre convergent criterion,
// and the closed forms for 4/p (p prime >= 5).
//
// Indexing is 0-based with a0 = floor(r); for 4/p this makes c0 = 0.
// Expansions are canonical: the last quotient is >= 2 unless the expansion
// is the single-term expansion of an integer.

#include "eslab/arith.hpp"
#include "eslab/primes.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace eslab {

struct CFExpansion {
    std::vector<Integer> quotients;  // [a0; a1, ..., al]

    std::size_t length() const { return quotients.size(); }
    bool operator==(const CFExpansion&) const = default;
};

struct Convergent {
    std::size_t k = 0;
    Integer p;  // numerator
    Integer q;  // denominator, >= 1

    Rational value() const { return Rational(p, q); }
};

struct ErrorTerm {
    std::size_t k = 0;
    Rational r_k;                // |value - c_k|
    Rational complete_quotient;  // x_{k+1}; 0/1 when k is the last index
    Integer q_prev;              // q_{k-1} (0 when k = 0)
    Integer q_k;
};

// Euclidean expansion; the final quotient comes out >= 2 automatically
// because remainders strictly decrease.
inline CFExpansion cf_expand(const Rational& r) {
    if (r.num() < 0) throw std::domain_error("cf_expand: negative input");
    CFExpansion cf;
    Integer num = r.num();
    Integer den = r.den();
    while (den != 0) {
        Integer q = num / den;
        cf.quotients.push_back(q);
        Integer rem = num - q * den;
        num = std::move(den);
        den = std::move(rem);
    }
    return cf;
}

// Standard recurrence p_k = a_k p_{k-1} + p_{k-2}, q_k likewise, seeded with
// p_{-1}=1, q_{-1}=0, p_0=a_0, q_0=1.
inline std::vector<Convergent> convergents(const CFExpansion& cf) {
    std::vector<Convergent> out;
    out.reserve(cf.length());
    Integer p_prev2 = 1, q_prev2 = 0;  // index -1
    Integer p_prev = 0, q_prev = 1;    // unused until k >= 1
    for (std::size_t k = 0; k < cf.length(); ++k) {
        Integer p, q;
        if (k == 0) {
            p = cf.quotients[0];
            q = 1;
        } else {
            p = cf.quotients[k] * p_prev + p_prev2;
            q = cf.quotients[k] * q_prev + q_prev2;
        }
        if (k >= 1) {
            p_prev2 = p_prev;
            q_prev2 = q_prev;
        }
        p_prev = p;
        q_prev = q;
        out.push_back(Convergent{k, std::move(p), std::move(q)});
    }
    return out;
}

// Value of the tail [a_{k+1}; a_{k+2}, ..., a_l]. Requires k < l.
inline Rational complete_quotient(const CFExpansion& cf, std::size_t k) {
    if (cf.length() < 2 || k + 1 >= cf.length())
        throw std::out_of_range("complete_quotient: index out of range");
    Rational tail(cf.quotients.back());
    for (std::size_t i = cf.length() - 1; i-- > k + 1;)
        tail = Rational(cf.quotients[i]) + tail.reciprocal();
    return tail;
}

inline ErrorTerm error_term(const Rational& r, std::size_t k) {
    CFExpansion cf = cf_expand(r);
    if (k >= cf.length()) throw std::out_of_range("error_term: index out of range");
    auto cs = convergents(cf);
    ErrorTerm et;
    et.k = k;
    et.r_k = rat_sub_abs(r, cs[k].value());
    et.q_k = cs[k].q;
    et.q_prev = (k == 0) ? Integer(0) : cs[k - 1].q;
    et.complete_quotient =
        (k + 1 < cf.length()) ? complete_quotient(cf, k) : Rational(0);
    return et;
}

struct LegendreResult {
    bool inequality_holds = false;  // |target - candidate| < 1/(2 s^2), exact
    bool is_convergent = false;
};

// Legendre criterion: a reduced r/s within 1/(2s^2) of the target must be one
// of its convergents. The inequality is strict; equality returns false.
inline LegendreResult legendre_check(const Rational& target, const Rational& candidate) {
    LegendreResult res;
    Rational diff = rat_sub_abs(target, candidate);
    res.inequality_holds = diff < Rational(Integer(1), 2 * candidate.den() * candidate.den());
    for (const auto& c : convergents(cf_expand(target)))
        if (c.value() == candidate) {
            res.is_convergent = true;
            break;
        }
    return res;
}

struct FourOverP {
    CFExpansion expansion;
    std::vector<Rational> convergent_values;
};

// Closed form of the expansion of 4/p:
//   p = 1 mod 4:  [0; (p-1)/4, 4]   convergents {0, 4/(p-1), 4/p}
//   p = 3 mod 4:  [0; (p-3)/4, 1, 3] convergents {0, 4/(p-3), 4/(p+1), 4/p}
inline FourOverP four_over_p_closed_form(std::uint64_t p) {
    if (p < 5 || !is_prime(p))
        throw std::domain_error("four_over_p_closed_form: p must be a prime >= 5");
    FourOverP out;
    Integer P(p);
    if (p % 4 == 1) {
        out.expansion.quotients = {0, (P - 1) / 4, 4};
        out.convergent_values = {Rational(0), Rational(Integer(4), P - 1), Rational(Integer(4), P)};
    } else {
        out.expansion.quotients = {0, (P - 3) / 4, 1, 3};
        out.convergent_values = {Rational(0), Rational(Integer(4), P - 3),
                                 Rational(Integer(4), P + 1), Rational(Integer(4), P)};
    }
    return out;
}

}  // namespace eslab
