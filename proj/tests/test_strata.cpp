#include <doctest.h>

#include "hilbzeta/error.hpp"
#include "hilbzeta/strata.hpp"

#include <random>
#include <set>

using namespace hilbzeta;

namespace {

QPoly lef(std::vector<IntPoly> cs) { return QPoly(Ring::lefschetz, std::move(cs)); }

} // namespace

TEST_CASE("admissible Hilbert function counts") {
    CHECK(enumerate_admissible(0).size() == 1);
    CHECK(enumerate_admissible(1).size() == 2);
    CHECK(enumerate_admissible(2).size() == 6);
    CHECK(enumerate_admissible(3).size() == 20);
    CHECK(enumerate_admissible(4).size() == 70);
}

TEST_CASE("genus two enumeration is the known list in lex order") {
    std::vector<std::vector<int>> expected = {
        {0, 0, 1}, {0, 1, 1}, {0, 1, 2}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}};
    std::vector<HilbertFn> all = enumerate_admissible(2);
    REQUIRE(all.size() == expected.size());
    for (size_t i = 0; i < all.size(); ++i) CHECK(all[i].stored_values() == expected[i]);
}

TEST_CASE("tails are reconstructed") {
    HilbertFn h(1, {1});
    CHECK(h.value(-3) == 0);
    CHECK(h.value(0) == 1);
    CHECK(h.value(1) == 1);
    CHECK(h.value(5) == 5);
    CHECK(!HilbertFn::try_make(1, {2}).has_value());
    CHECK(!HilbertFn::try_make(2, {1, 0, 1}).has_value());
}

TEST_CASE("jump sets of the genus-one functions") {
    JumpSets with_section = jump_sets(HilbertFn(1, {1}));
    CHECK(with_section.starts == std::vector<int>{0, 2});
    CHECK(with_section.stops == std::vector<int>{1});

    JumpSets without_section = jump_sets(HilbertFn(1, {0}));
    CHECK(without_section.starts == std::vector<int>{1});
    CHECK(without_section.stops.empty());

    JumpSets rational = jump_sets(HilbertFn(0, {}));
    CHECK(rational.starts == std::vector<int>{0});
    CHECK(rational.stops.empty());
}

TEST_CASE("stratum polynomials of the small cases") {
    CHECK(stratum_poly(HilbertFn(1, {1})) ==
          lef({IntPoly(1), -IntPoly::monomial(1), IntPoly::monomial(1)}));
    CHECK(stratum_poly(HilbertFn(1, {0})) == QPoly::q_monomial(Ring::lefschetz, 1, IntPoly(1)));
    CHECK(stratum_poly(HilbertFn(0, {})) == QPoly::one(Ring::lefschetz));
}

TEST_CASE("serre duality on Hilbert functions") {
    CHECK(serre_dual(HilbertFn(1, {1})) == HilbertFn(1, {1}));
    CHECK(serre_dual(HilbertFn(1, {0})) == HilbertFn(1, {0}));
    HilbertFn h(2, {0, 1, 1});
    HilbertFn dual = serre_dual(h);
    CHECK(dual == HilbertFn(2, {0, 1, 1})); // h(2-d) + d - 1 reproduces (0,1,1)
    for (int g = 0; g <= 5; ++g)
        for (const HilbertFn& fn : enumerate_admissible(g)) CHECK(serre_dual(serre_dual(fn)) == fn);
}

TEST_CASE("stratum polynomial agrees with the direct projective-bundle expansion") {
    // (1-q)(1-qL) * sum_d q^d [P^(h(d)-1)] must telescope to the jump-set form
    for (int g = 0; g <= 4; ++g)
        for (const HilbertFn& h : enumerate_admissible(g)) {
            int n = 2 * g + 4;
            QSeries bundles(Ring::lefschetz, n);
            for (int d = 0; d <= n; ++d) {
                std::vector<BigInt> cs(static_cast<size_t>(std::max(h.value(d), 0)), BigInt(1));
                bundles.set_coeff(d, IntPoly::from_coeffs(std::move(cs)));
            }
            QPoly denominators = lef({IntPoly(1), IntPoly(-1)}) * lef({IntPoly(1), -IntPoly::monomial(1)});
            QSeries telescoped = bundles * denominators;
            QPoly zh = stratum_poly(h);
            for (int d = 0; d <= n; ++d) CHECK(telescoped.coeff(d) == zh.coeff(d));
        }
}

TEST_CASE("stratum duality checks pass exhaustively") {
    for (int g = 0; g <= 4; ++g)
        for (const HilbertFn& fn : enumerate_admissible(g)) {
            DualityReport report = check_stratum_duality(fn);
            CHECK(report.pass);
        }
}

TEST_CASE("degree and index bounds hold exhaustively") {
    for (int g = 0; g <= 5; ++g)
        for (const HilbertFn& fn : enumerate_admissible(g)) {
            CHECK(stratum_poly(fn).degree() <= 2 * g);
            JumpSets sets = jump_sets(fn);
            for (int d : sets.starts) {
                CHECK(d >= 0);
                CHECK(d <= 2 * g);
            }
            for (int d : sets.stops) {
                CHECK(d >= 1);
                CHECK(d <= 2 * g - 1);
            }
            // Euler value of the stratum polynomial counts jump degrees
            BigInt euler = euler_specialize(stratum_poly(fn)).coeff_sum();
            CHECK(euler == BigInt(static_cast<long long>(sets.starts.size()) -
                                  static_cast<long long>(sets.stops.size())));
        }
}

TEST_CASE("assembly reproduces the node and cusp numerators") {
    HilbertFn h1(1, {1}), h0(1, {0});
    StrataDecomp node_decomp{{{h1, IntPoly(1)}, {h0, IntPoly{-1, 1}}}};
    CHECK(assemble(node_decomp) == lef({IntPoly(1), IntPoly(-1), IntPoly::monomial(1)}));

    StrataDecomp cusp_decomp{{{h1, IntPoly(1)}, {h0, IntPoly::monomial(1)}}};
    CHECK(assemble(cusp_decomp) == lef({IntPoly(1), IntPoly(), IntPoly::monomial(1)}));

    CHECK(assemble(StrataDecomp{}).is_zero());

    // duplicate entries and mixed genera are rejected
    StrataDecomp dup{{{h1, IntPoly(1)}, {h1, IntPoly(2)}}};
    CHECK_THROWS_AS((void)assemble(dup), Error);
    StrataDecomp mixed{{{h1, IntPoly(1)}, {HilbertFn(0, {}), IntPoly(1)}}};
    CHECK_THROWS_AS((void)assemble(mixed), Error);
}

TEST_CASE("strata solving inverts the node and cusp assemblies") {
    QPoly node = lef({IntPoly(1), IntPoly(-1), IntPoly::monomial(1)});
    StrataSolution sol = solve_strata(node, 1);
    REQUIRE(sol.unique());
    REQUIRE(sol.basis.size() == 2);
    // lex order: (0) then (1)
    CHECK(sol.basis[0] == HilbertFn(1, {0}));
    CHECK(sol.particular[0] == IntPoly{-1, 1}); // L - 1
    CHECK(sol.particular[1] == IntPoly(1));
    // class sum is the compactified Jacobian class L
    CHECK(sol.particular[0] + sol.particular[1] == IntPoly::monomial(1));

    QPoly cusp = lef({IntPoly(1), IntPoly(), IntPoly::monomial(1)});
    StrataSolution cusp_sol = solve_strata(cusp, 1);
    REQUIRE(cusp_sol.unique());
    CHECK(cusp_sol.particular[0] == IntPoly::monomial(1));
    CHECK(cusp_sol.particular[1] == IntPoly(1));
    CHECK(cusp_sol.particular[0] + cusp_sol.particular[1] == IntPoly{1, 1}); // L + 1

    // degree beyond 2g has no decomposition
    StrataSolution none = solve_strata(QPoly::q_monomial(Ring::lefschetz, 3, IntPoly(1)), 1);
    CHECK(!none.consistent);
    CHECK(none.diagnostic.find("no decomposition") != std::string::npos);
}

TEST_CASE("solving round trips random assemblies") {
    std::mt19937 rng(60290);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> ldeg(0, 2);
    for (int genus = 1; genus <= 3; ++genus) {
        std::vector<HilbertFn> all = enumerate_admissible(genus);
        std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
        for (int trial = 0; trial < 10; ++trial) {
            StrataDecomp decomp;
            std::set<size_t> used;
            for (int e = 0; e < 3; ++e) {
                size_t idx = pick(rng);
                if (used.count(idx)) continue;
                used.insert(idx);
                std::vector<BigInt> cs(static_cast<size_t>(ldeg(rng)) + 1);
                for (auto& v : cs) v = BigInt(coeff(rng));
                IntPoly cls = IntPoly::from_coeffs(std::move(cs));
                if (cls.is_zero()) continue;
                decomp.entries.push_back({all[idx], cls});
            }
            QPoly z = assemble(decomp);
            StrataSolution sol = solve_strata(z, genus);
            REQUIRE(sol.consistent);
            REQUIRE(sol.integral);
            // the solver's particular solution must reassemble to z
            StrataDecomp check;
            for (size_t i = 0; i < sol.basis.size(); ++i)
                if (!sol.particular[i].is_zero()) check.entries.push_back({sol.basis[i], sol.particular[i]});
            CHECK(assemble(check) == z);
        }
    }
}
