#include <doctest.h>

#include "hilbzeta/interpolate.hpp"
#include "hilbzeta/error.hpp"

#include <random>

using namespace hilbzeta;

namespace {

std::vector<std::pair<BigInt, BigInt>> samples_of(std::initializer_list<std::pair<long long, long long>> raw) {
    std::vector<std::pair<BigInt, BigInt>> out;
    for (auto [x, y] : raw) out.push_back({BigInt(x), BigInt(y)});
    return out;
}

} // namespace

TEST_CASE("linear and constant fits") {
    auto linear = interpolate_exact(samples_of({{2, 3}, {3, 4}, {5, 6}}), 1);
    REQUIRE(linear.poly.has_value());
    CHECK(*linear.poly == IntPoly{1, 1});

    auto constant = interpolate_exact(samples_of({{2, 1}, {3, 1}, {5, 1}}), 2);
    REQUIRE(constant.poly.has_value());
    CHECK(*constant.poly == IntPoly{1});

    auto slope2 = interpolate_exact(samples_of({{2, 5}, {3, 7}, {5, 11}, {7, 15}}), 1);
    REQUIRE(slope2.poly.has_value());
    CHECK(*slope2.poly == IntPoly{1, 2});
}

TEST_CASE("non-integer coefficients are diagnosed") {
    auto bad = interpolate_exact(samples_of({{2, 1}, {3, 2}, {5, 3}}), 2);
    CHECK(!bad.poly.has_value());
    CHECK(bad.diagnostic.find("not polynomial-count") != std::string::npos);
}

TEST_CASE("surplus sample mismatch is diagnosed") {
    // 1 + L through the first two points, but the surplus sample lies
    auto bad = interpolate_exact(samples_of({{2, 3}, {3, 4}, {5, 7}}), 1);
    CHECK(!bad.poly.has_value());
    CHECK(bad.diagnostic.find("surplus") != std::string::npos);
}

TEST_CASE("duplicate points are rejected") {
    CHECK_THROWS_AS((void)interpolate_exact(samples_of({{2, 3}, {2, 3}, {5, 6}}), 1), Error);
}

TEST_CASE("round trip recovers random polynomials of degree up to 8") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coeff(-50, 50);
    for (int trial = 0; trial < 200; ++trial) {
        int degree = trial % 9;
        std::vector<BigInt> cs;
        for (int i = 0; i <= degree; ++i) cs.push_back(BigInt(coeff(rng)));
        IntPoly truth = IntPoly::from_coeffs(std::move(cs));
        std::vector<std::pair<BigInt, BigInt>> samples;
        for (int x = 2; samples.size() < static_cast<size_t>(degree) + 3; ++x)
            samples.push_back({BigInt(x), truth.eval(BigInt(x))});
        auto fit = interpolate_exact(samples, degree);
        REQUIRE(fit.poly.has_value());
        CHECK(*fit.poly == truth);
    }
}
