#pragma once

// Exact unbounded integer and rational arithmetic. Everything downstream
// (continued fractions, solution enumeration, lattice counts) runs on these
// types; no floating point appears outside the reporting layer.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace eslab {

using Integer = boost::multiprecision::cpp_int;

// gcd(0,0) = 0 by convention.
inline Integer gcd(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// floor(sqrt(n)), n >= 0.
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    if (n == 0) return 0;
    Integer r = boost::multiprecision::sqrt(n);
    // boost::sqrt is already the integer square root; keep the contract
    // explicit with a cheap local correction.
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// If n = a^2 with a >= 0 odd, returns a; otherwise nothing. Negative n and
// even-rooted squares both come back empty.
inline std::optional<Integer> as_odd_square_root(const Integer& n) {
    if (n < 0) return std::nullopt;
    Integer r = isqrt(n);
    if (r * r != n) return std::nullopt;
    if (r % 2 == 0) return std::nullopt;
    return r;
}

// Reduced fraction with positive denominator; zero is 0/1. Reduction happens
// at construction so equality is structural.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Integer floor() const {
        Integer q = num_ / den_;
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }

    Rational reciprocal() const {
        if (num_ == 0) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        Integer lhs = a.num_ * b.den_;
        Integer rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const {
        std::string s = num_.str();
        s += '/';
        s += den_.str();
        return s;
    }

private:
    void reduce() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Integer g = gcd(num_ < 0 ? Integer(-num_) : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    Integer num_;
    Integer den_;
};

inline Rational rat_make(Integer num, Integer den) {
    return Rational(std::move(num), std::move(den));
}

inline Rational rat_abs(const Rational& a) {
    return a.num() < 0 ? Rational(-a.num(), a.den()) : a;
}

// |a - b|, exact.
inline Rational rat_sub_abs(const Rational& a, const Rational& b) {
    return rat_abs(a - b);
}

}  // namespace eslab
