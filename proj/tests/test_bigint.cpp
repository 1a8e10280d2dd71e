#include <doctest.h>

#include "hilbzeta/bigint.hpp"
#include "hilbzeta/error.hpp"
#include "hilbzeta/rational.hpp"

#include <random>

using hilbzeta::BigInt;
using hilbzeta::BigRational;

TEST_CASE("small arithmetic agrees with int64") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
    for (int i = 0; i < 500; ++i) {
        long long a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("divmod identity on large operands") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
    for (int i = 0; i < 200; ++i) {
        BigInt a = BigInt(dist(rng)) * BigInt(dist(rng)) * BigInt(dist(rng));
        BigInt b = BigInt(dist(rng)) * BigInt(dist(rng));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.signum() == a.signum());
    }
}

TEST_CASE("factorial landmark and string round trip") {
    BigInt f(1);
    for (int i = 2; i <= 25; ++i) f *= BigInt(i);
    CHECK(f.to_string() == "15511210043330985984000000");
    CHECK(BigInt::from_string("15511210043330985984000000") == f);
    CHECK(BigInt::from_string("-007") == BigInt(-7));
    CHECK(BigInt(0).to_string() == "0");
}

TEST_CASE("pow and gcd") {
    CHECK(BigInt(2).pow(70).to_string() == "1180591620717411303424");
    CHECK(BigInt::gcd(BigInt(252), BigInt(-105)) == BigInt(21));
    CHECK(BigInt::gcd(BigInt(0), BigInt(-5)) == BigInt(5));
    CHECK(BigInt(-3).pow(3) == BigInt(-27));
}

TEST_CASE("int64 boundary handling") {
    BigInt min_ll(static_cast<long long>(INT64_MIN));
    CHECK(min_ll.to_string() == "-9223372036854775808");
    CHECK(min_ll.fits_int64());
    CHECK(min_ll.to_int64() == INT64_MIN);
    BigInt beyond = BigInt(static_cast<long long>(INT64_MAX)) + BigInt(1);
    CHECK(!beyond.fits_int64());
    CHECK_THROWS_AS((void)beyond.to_int64(), hilbzeta::Error);
}

TEST_CASE("rationals reduce canonically") {
    BigRational half(BigInt(2), BigInt(4));
    CHECK(half.numerator() == BigInt(1));
    CHECK(half.denominator() == BigInt(2));
    BigRational neg(BigInt(3), BigInt(-6));
    CHECK(neg.numerator() == BigInt(-1));
    CHECK(neg.denominator() == BigInt(2));
    CHECK((half + neg).is_zero());
    CHECK((half * BigRational(BigInt(2))).is_integer());
    CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), hilbzeta::Error);
}
