#include "eslab/arith.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <random>

using namespace eslab;

TEST_CASE("gcd basics") {
    CHECK(gcd(0, 7) == 7);
    CHECK(gcd(4, 6) == 2);
    CHECK(gcd(2, 5) == 1);
    CHECK(gcd(0, 0) == 0);
    CHECK(gcd(Integer("123456789012345678901234"), Integer("987654321098765432109876")) ==
          gcd(Integer("987654321098765432109876"), Integer("123456789012345678901234")));
}

TEST_CASE("rat_make reduces and normalizes sign") {
    CHECK(rat_make(8, 16) == Rational(1, 2));
    CHECK(rat_make(4, 5) == Rational(4, 5));
    CHECK(rat_make(-3, -6) == Rational(1, 2));
    CHECK(rat_make(0, -9) == Rational(0));
    CHECK(rat_make(0, -9).den() == 1);
    CHECK_THROWS_AS(rat_make(1, 0), std::domain_error);
}

TEST_CASE("rat_sub_abs") {
    CHECK(rat_sub_abs(Rational(4, 7), Rational(1, 2)) == Rational(1, 14));
    CHECK(rat_sub_abs(Rational(4, 5), Rational(4, 5)) == Rational(0));
    CHECK(rat_sub_abs(Rational(4, 13), Rational(1, 3)) == Rational(1, 39));
}

TEST_CASE("rat_sub_abs is symmetric and nonnegative") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 500; ++i) {
        Rational a(static_cast<long long>(rng() % 2001) - 1000,
                   static_cast<long long>(rng() % 50) + 1);
        Rational b(static_cast<long long>(rng() % 2001) - 1000,
                   static_cast<long long>(rng() % 50) + 1);
        Rational d1 = rat_sub_abs(a, b);
        Rational d2 = rat_sub_abs(b, a);
        CHECK(d1 == d2);
        CHECK(d1 >= Rational(0));
        CHECK((d1 == Rational(0)) == (a == b));
    }
}

TEST_CASE("isqrt basics") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(49) == 7);
    CHECK(isqrt(50) == 7);
    CHECK_THROWS_AS(isqrt(-1), std::domain_error);
}

TEST_CASE("isqrt exhaustive to 10^6") {
    for (long long n = 0; n <= 1'000'000; ++n) {
        Integer r = isqrt(Integer(n));
        REQUIRE(r * r <= n);
        REQUIRE((r + 1) * (r + 1) > n);
    }
}

TEST_CASE("as_odd_square_root") {
    CHECK(as_odd_square_root(9) == Integer(3));
    CHECK(as_odd_square_root(16) == std::nullopt);
    CHECK(as_odd_square_root(-7) == std::nullopt);
    CHECK(as_odd_square_root(0) == std::nullopt);
    CHECK(as_odd_square_root(1) == Integer(1));
}

TEST_CASE("as_odd_square_root exhaustive to 10^5") {
    for (long long n = 0; n <= 100'000; ++n) {
        auto r = as_odd_square_root(Integer(n));
        Integer s = isqrt(Integer(n));
        bool expect = s * s == n && s % 2 == 1;
        if (expect) {
            REQUIRE(r.has_value());
            REQUIRE(*r * *r == n);
            REQUIRE(*r % 2 == 1);
        } else {
            REQUIRE(!r.has_value());
        }
    }
}
