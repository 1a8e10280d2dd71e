#include <doctest.h>

#include "hilbzeta/error.hpp"
#include "hilbzeta/germ.hpp"
#include "hilbzeta/oracle.hpp"
#include "hilbzeta/zeta.hpp"

#include <numeric>

using namespace hilbzeta;

TEST_CASE("germ equation parsing") {
    BivarPoly f = BivarPoly::parse("y^2 - x^3");
    CHECK(f.terms().size() == 2);
    CHECK(f.order() == 2);
    CHECK(f.to_string() == "y^2 - x^3");

    CHECK(BivarPoly::parse("(x + y)^2 - 4*x*y").to_string() == "y^2 - 2*x*y + x^2");
    CHECK(BivarPoly::parse("x*y").order() == 2);
    CHECK(BivarPoly::parse("-x").to_string() == "-x");
    CHECK(BivarPoly::parse("2^3").constant_term() == BigInt(8));

    CHECK_THROWS_AS((void)BivarPoly::parse("x +"), Error);
    CHECK_THROWS_AS((void)BivarPoly::parse("z"), Error);
    CHECK_THROWS_AS((void)BivarPoly::parse("x y"), Error);
    CHECK_THROWS_AS((void)make_germ_eq("bad", "x*y + 1", 1, 1), Error); // f(0,0) != 0
}

TEST_CASE("finite quotient construction") {
    FiniteQuotient node = FiniteQuotient::build(BivarPoly::parse("x*y"), 2, 2);
    CHECK(node.dim() == 3);
    CHECK(node.basis() == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}});

    FiniteQuotient cusp = FiniteQuotient::build(BivarPoly::parse("y^2 - x^3"), 3, 2);
    CHECK(cusp.dim() == 3);

    FiniteQuotient tiny = FiniteQuotient::build(BivarPoly::parse("x*y"), 5, 1);
    CHECK(tiny.dim() == 1);

    // 2 divides the lowest-order part of 2xy + x^5
    CHECK_THROWS_AS((void)FiniteQuotient::build(BivarPoly::parse("2*x*y + x^5"), 2, 3), Error);
}

TEST_CASE("quotient multiplication matrices commute and are nilpotent") {
    auto matmul = [](const std::vector<std::vector<uint32_t>>& a,
                     const std::vector<std::vector<uint32_t>>& b, uint32_t p) {
        size_t n = a.size();
        std::vector<std::vector<uint32_t>> out(n, std::vector<uint32_t>(n, 0));
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                if (b[j][k] == 0) continue;
                for (size_t i = 0; i < n; ++i)
                    out[j][i] = static_cast<uint32_t>((out[j][i] + uint64_t(b[j][k]) * a[k][i]) % p);
            }
        return out; // column-major composition: (a after b)
    };
    for (const char* eq : {"x*y", "y^2 - x^3", "y^2 - x^4", "y^3 - x^4"}) {
        for (uint32_t p : {2u, 5u}) {
            FiniteQuotient q = FiniteQuotient::build(BivarPoly::parse(eq), p, 4);
            auto xy = matmul(q.mult_x(), q.mult_y(), p);
            auto yx = matmul(q.mult_y(), q.mult_x(), p);
            CHECK(xy == yx);
            // both multiplications are nilpotent on the truncation
            auto power_x = q.mult_x(), power_y = q.mult_y();
            for (int step = 1; step < q.truncation(); ++step) {
                power_x = matmul(power_x, q.mult_x(), p);
                power_y = matmul(power_y, q.mult_y(), p);
            }
            auto is_zero = [](const std::vector<std::vector<uint32_t>>& m) {
                for (const auto& col : m)
                    for (uint32_t v : col)
                        if (v) return false;
                return true;
            };
            CHECK(is_zero(power_x));
            CHECK(is_zero(power_y));
        }
    }
}

TEST_CASE("ideal counts for the node") {
    // punctual classes 1 + (n-1)L evaluated at L = p
    for (uint32_t p : {2u, 3u, 5u}) {
        FiniteQuotient q = FiniteQuotient::build(BivarPoly::parse("x*y"), p, 4);
        std::vector<long long> counts = q.count_ideals_by_colength(4);
        REQUIRE(counts.size() == 5);
        CHECK(counts[0] == 1);
        CHECK(counts[1] == 1);
        CHECK(counts[2] == 1 + static_cast<long long>(p));
        CHECK(counts[3] == 1 + 2LL * p);
        CHECK(counts[4] == 1 + 3LL * p);
    }
}

TEST_CASE("counts are invariant under basis permutation and deeper truncation") {
    FiniteQuotient q = FiniteQuotient::build(BivarPoly::parse("x*y"), 3, 3);
    std::vector<long long> base = q.count_ideals_by_colength(3);
    FiniteQuotient shuffled = q;
    std::vector<int> perm(static_cast<size_t>(q.dim()));
    std::iota(perm.begin(), perm.end(), 0);
    std::rotate(perm.begin(), perm.begin() + 1, perm.end());
    shuffled.permute_basis(perm);
    CHECK(shuffled.count_ideals_by_colength(3) == base);

    // raising the truncation does not change counts at fixed colength
    for (uint32_t p : {2u, 3u}) {
        for (int n = 1; n <= 3; ++n) {
            FiniteQuotient exact = FiniteQuotient::build(BivarPoly::parse("x*y"), p, n);
            FiniteQuotient deeper = FiniteQuotient::build(BivarPoly::parse("x*y"), p, n + 1);
            CHECK(exact.count_ideals_by_colength(n).back() ==
                  deeper.count_ideals_by_colength(n)[static_cast<size_t>(n)]);
            FiniteQuotient cusp_exact = FiniteQuotient::build(BivarPoly::parse("y^2 - x^3"), p, n);
            FiniteQuotient cusp_deeper = FiniteQuotient::build(BivarPoly::parse("y^2 - x^3"), p, n + 1);
            CHECK(cusp_exact.count_ideals_by_colength(n).back() ==
                  cusp_deeper.count_ideals_by_colength(n)[static_cast<size_t>(n)]);
        }
    }
}

TEST_CASE("oracle fit for the node") {
    GermEq node = make_germ_eq("node", "x*y", 2, 1);
    OracleRun run = oracle_fit(node, 3, {2, 3, 5, 7});
    REQUIRE(run.all_fitted);
    CHECK(*run.fits[0].cls == IntPoly(1));
    CHECK(*run.fits[1].cls == IntPoly(1));
    CHECK(*run.fits[2].cls == IntPoly{1, 1});
    CHECK(*run.fits[3].cls == IntPoly{1, 2});
    for (const OracleFit& fit : run.fits) CHECK(fit.surplus_checked);

    auto factor = run.completed_factor();
    REQUIRE(factor.has_value());
    CHECK(*factor == QPoly(Ring::lefschetz, {IntPoly(1), IntPoly(-1), IntPoly::monomial(1)}));
}

TEST_CASE("oracle fit for the cusp and a smooth germ") {
    GermEq cusp = make_germ_eq("cusp", "y^2 - x^3", 1, 1);
    OracleRun run = oracle_fit(cusp, 2, {2, 3, 5});
    REQUIRE(run.all_fitted);
    CHECK(*run.fits[2].cls == IntPoly{1, 1}); // the colength-2 punctual locus is a P^1
    auto factor = run.completed_factor();
    REQUIRE(factor.has_value());
    CHECK(*factor == QPoly(Ring::lefschetz, {IntPoly(1), IntPoly(), IntPoly::monomial(1)}));

    GermEq smooth = make_germ_eq("smooth", "y - x^2", 1, 0);
    OracleRun smooth_run = oracle_fit(smooth, 2, {2, 3, 5});
    REQUIRE(smooth_run.all_fitted);
    for (const OracleFit& fit : smooth_run.fits) CHECK(*fit.cls == IntPoly(1));
}

TEST_CASE("oracle regenerates every built-in local factor") {
    GermRegistry registry;
    struct Sample {
        const char* label;
        std::vector<uint32_t> primes;
    };
    std::vector<Sample> samples = {
        {"node", {2, 3, 5}},
        {"cusp", {2, 3, 5}},
        {"tacnode", {2, 3, 5, 7, 11}},
        {"ramphoid", {2, 3, 5, 7, 11, 13, 17}},
    };
    for (const Sample& sample : samples) {
        const GermSpec& spec = registry.require(sample.label);
        GermEq germ = make_germ_eq(spec.label, spec.equation, spec.branches, spec.cogenus);
        OracleRun run = oracle_fit(germ, 2 * spec.cogenus, sample.primes);
        REQUIRE(run.all_fitted);
        auto factor = run.completed_factor();
        REQUIRE(factor.has_value());
        CHECK(*factor == *spec.local_factor);
    }
}

TEST_CASE("oracle handles a three-branch germ that is not a built-in") {
    // ordinary triple point: three rational concurrent lines, b = 3, delta = 3
    GermEq triple = make_germ_eq("triple", "x*y*(x + y)", 3, 3);
    OracleRun run = oracle_fit(triple, 6, {2, 3, 5, 7, 11, 13, 17});
    REQUIRE(run.all_fitted);
    CHECK(*run.fits[3].cls == IntPoly{1, 1, 1});
    CHECK(*run.fits[4].cls == IntPoly{1, 1, 4});
    CHECK(*run.fits[6].cls == IntPoly{1, 1, 10, 1});
    auto factor = run.completed_factor();
    REQUIRE(factor.has_value());
    CHECK(factor->degree() == 6);
    CHECK(check_functional_equation(*factor, 3).pass);
    // Euler profile of the punctual Hilbert schemes: 1,1,2,3,6,9,13
    std::vector<long long> euler = {1, 1, 2, 3, 6, 9, 13};
    for (int n = 0; n <= 6; ++n)
        CHECK(run.fits[static_cast<size_t>(n)].cls->coeff_sum() == BigInt(euler[static_cast<size_t>(n)]));
}

TEST_CASE("surplus failure is reported, not thrown") {
    // feed inconsistent hand-made samples through the public fit path by
    // using a germ whose counts are polynomial but requesting an impossible
    // degree: fit n=2 with degree cap 1 forces the node class (1+L) to fit
    // on two primes and verify on the rest, which succeeds; instead check
    // the diagnostic path via interpolate on doctored data in test_interpolate.
    GermEq node = make_germ_eq("node", "x*y", 2, 1);
    CHECK_THROWS_AS((void)oracle_fit(node, 3, {2, 3}), Error); // too few primes
    CHECK_THROWS_AS((void)oracle_fit(node, 2, {2, 3, 4}), Error); // 4 is not prime
}
