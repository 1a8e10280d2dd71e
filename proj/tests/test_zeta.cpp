#include <doctest.h>

#include "hilbzeta/error.hpp"
#include "hilbzeta/germ.hpp"
#include "hilbzeta/zeta.hpp"

#include <cstdio>

using namespace hilbzeta;

namespace {

IntPoly projective_space(int d) {
    std::vector<BigInt> cs(static_cast<size_t>(d) + 1, BigInt(1));
    return IntPoly::from_coeffs(std::move(cs));
}

} // namespace

TEST_CASE("smooth series over the Lefschetz ring is the Sym P^1 series") {
    QSeries s = smooth_series(0, Ring::lefschetz, 3);
    for (int d = 0; d <= 3; ++d) CHECK(s.coeff(d) == projective_space(d));
    CHECK_THROWS_AS((void)smooth_series(1, Ring::lefschetz, 3), Error);
}

TEST_CASE("smooth series over the weight ring") {
    QSeries r1 = smooth_series(1, Ring::weight, 2);
    CHECK(r1.coeff(0) == IntPoly(1));
    CHECK(r1.coeff(1) == IntPoly{1, 2, 1});
    CHECK(r1.coeff(2) == IntPoly{1, 2, 2, 2, 1});

    QSeries r0 = smooth_series(0, Ring::weight, 1);
    CHECK(r0.coeff(1) == IntPoly{1, 0, 1});
}

TEST_CASE("built-in local factors") {
    GermRegistry registry;
    CHECK(local_factor(registry.require("node")).to_string() == "1 - q + q^2*L");
    CHECK(local_factor(registry.require("cusp")).to_string() == "1 + q^2*L");
    CHECK(local_factor(registry.require("tacnode")).degree() == 4);
    CHECK(local_factor(registry.require("ramphoid")).degree() == 6);

    GermSpec mystery;
    mystery.label = "mystery";
    mystery.branches = 1;
    mystery.cogenus = 2;
    CHECK_THROWS_AS((void)local_factor(mystery), Error);
    try {
        (void)local_factor(mystery);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("mystery") != std::string::npos);
        CHECK(e.kind() == Error::Kind::unknown_germ);
    }
}

TEST_CASE("every built-in factor satisfies the functional equation with degree 2*cogenus") {
    GermRegistry registry;
    for (const GermSpec* spec : registry.all()) {
        QPoly factor = local_factor(*spec);
        CHECK(factor.degree() == 2 * spec->cogenus);
        CHECK(factor.coeff(0).is_one());
        CHECK(check_functional_equation(factor, spec->cogenus).pass);
    }
}

TEST_CASE("curve series for a nodal rational curve") {
    GermRegistry registry;
    CurveSpec curve;
    curve.germs.push_back(registry.require("node"));
    QSeries s = curve_series(curve, Ring::lefschetz, 3);
    // (1 - q + q^2 L)/((1-q)(1-qL)): 1, L, L + L^2, L + L^2 + L^3
    CHECK(s.coeff(0) == IntPoly(1));
    CHECK(s.coeff(1) == IntPoly{0, 1});
    CHECK(s.coeff(2) == IntPoly{0, 1, 1});
    CHECK(s.coeff(3) == IntPoly{0, 1, 1, 1});

    CurveSpec cusp_curve;
    cusp_curve.germs.push_back(registry.require("cusp"));
    QSeries c = curve_series(cusp_curve, Ring::lefschetz, 2);
    CHECK(c.coeff(2) == IntPoly{1, 2, 1}); // 1 + 2L + L^2

    CurveSpec bare;
    CHECK(curve_series(bare, Ring::lefschetz, 3).coeff(3) == projective_space(3));
}

TEST_CASE("curve series agrees with the support-splitting route") {
    // split subschemes by support: Sym of the punctured smooth locus times
    // the punctual series, against the normalized product route
    GermRegistry registry;
    CurveSpec curve;
    curve.germs.push_back(registry.require("node"));
    int n = 6;
    QSeries via_factor = curve_series(curve, Ring::lefschetz, n);

    // Sym^k of G_m expands (1-q)/(1-qL); node punctual classes are 1+(n-1)L
    QSeries sym_gm = QSeries::from_poly(QPoly(Ring::lefschetz, {IntPoly(1), IntPoly(-1)}), n) *
                     QSeries::from_poly(QPoly(Ring::lefschetz, {IntPoly(1), -IntPoly::monomial(1)}), n)
                         .invert_unit();
    QSeries punctual(Ring::lefschetz, n);
    punctual.set_coeff(0, IntPoly(1));
    for (int k = 1; k <= n; ++k) punctual.set_coeff(k, IntPoly(1) + IntPoly::monomial(1, BigInt(k - 1)));
    QSeries via_support = sym_gm * punctual;
    for (int d = 0; d <= n; ++d) CHECK(via_support.coeff(d) == via_factor.coeff(d));
}

TEST_CASE("curve series coefficients stay non-negative for built-in configurations") {
    GermRegistry registry;
    for (const char* label : {"node", "cusp", "tacnode", "ramphoid"}) {
        CurveSpec curve;
        curve.germs.push_back(registry.require(label));
        QSeries s = curve_series(curve, Ring::lefschetz, 8);
        for (int d = 0; d <= 8; ++d) CHECK(!s.coeff(d).has_negative_coeff());
    }
}

TEST_CASE("zeta numerators multiply over germs") {
    GermRegistry registry;
    QPoly node = local_factor(registry.require("node"));
    QPoly cusp = local_factor(registry.require("cusp"));

    CurveSpec two_nodes;
    two_nodes.germs = {registry.require("node"), registry.require("node")};
    CHECK(zeta_numerator(two_nodes) == node * node);

    CurveSpec mixed;
    mixed.germs = {registry.require("node"), registry.require("cusp")};
    CHECK(zeta_numerator(mixed) == node * cusp);

    CurveSpec empty;
    CHECK(zeta_numerator(empty) == QPoly::one(Ring::lefschetz));

    // multiplicativity over all subsets of the built-ins
    std::vector<const GermSpec*> builtins = registry.all();
    for (unsigned mask = 0; mask < (1u << builtins.size()); ++mask) {
        CurveSpec curve;
        QPoly expected = QPoly::one(Ring::lefschetz);
        for (size_t i = 0; i < builtins.size(); ++i)
            if (mask & (1u << i)) {
                curve.germs.push_back(*builtins[i]);
                expected *= local_factor(*builtins[i]);
            }
        CHECK(zeta_numerator(curve) == expected);
        CHECK(check_functional_equation(expected, curve.cogenus()).pass);
    }
}

TEST_CASE("euler specializations of the numerators") {
    GermRegistry registry;
    auto euler_value = [&](const char* label) {
        QPoly factor = local_factor(registry.require(label));
        return euler_specialize(factor).coeff_sum(); // L -> 1 then q -> 1
    };
    CHECK(euler_value("node") == BigInt(1));
    CHECK(euler_value("cusp") == BigInt(2));
    CHECK(euler_value("tacnode") == BigInt(1));
    CHECK(euler_value("ramphoid") == BigInt(5));
}

TEST_CASE("functional equation verdicts") {
    GermRegistry registry;
    CHECK(check_functional_equation(local_factor(registry.require("node")), 1).pass);
    CHECK(check_functional_equation(QPoly::one(Ring::lefschetz), 0).pass);

    FunctionalEqReport fail_report =
        check_functional_equation(QPoly(Ring::lefschetz, {IntPoly(1), IntPoly(-1)}), 1);
    CHECK(!fail_report.pass);
    CHECK(!fail_report.detail.empty());

    FunctionalEqReport degree_report =
        check_functional_equation(QPoly::q_monomial(Ring::lefschetz, 3, IntPoly(1)), 1);
    CHECK(!degree_report.pass);
    CHECK(degree_report.detail.find("exceeds") != std::string::npos);
}

TEST_CASE("rational zeta expansion round trips its numerator") {
    GermRegistry registry;
    CurveSpec curve;
    curve.germs = {registry.require("node"), registry.require("cusp")};
    RationalZeta zeta = curve_zeta(curve, Ring::lefschetz);
    QSeries expansion = zeta.expand(10);
    // multiply the denominators back in and compare against the numerator
    QPoly denom = QPoly(Ring::lefschetz, {IntPoly(1), IntPoly(-1)}) *
                  QPoly(Ring::lefschetz, {IntPoly(1), -IntPoly::monomial(1)});
    QSeries recovered = expansion * denom;
    for (int d = 0; d <= 10; ++d) CHECK(recovered.coeff(d) == zeta.numerator.coeff(d));

    CurveSpec genus_two;
    genus_two.normalization_genus = 2;
    RationalZeta weighted = curve_zeta(genus_two, Ring::weight);
    CHECK(weighted.numerator.degree() == 4); // (1+tq)^4
    CHECK_THROWS_AS((void)curve_zeta(genus_two, Ring::lefschetz), Error);
}

TEST_CASE("nodal weight series examples") {
    QSeries sym = nodal_weight_series(0, 0, 2);
    CHECK(sym.coeff(0) == IntPoly(1));
    CHECK(sym.coeff(1) == IntPoly{1, 0, 1});
    CHECK(sym.coeff(2) == IntPoly{1, 0, 1, 0, 1});

    QSeries one_node = nodal_weight_series(1, 0, 1);
    CHECK(one_node.coeff(1) == IntPoly::monomial(2)); // q^1 coefficient is t^2

    // coefficient-wise agreement across different truncations
    CHECK(nodal_weight_series(1, 0, 8).agrees_with(nodal_weight_series(1, 0, 5)));
}

TEST_CASE("weight crosscheck grid") {
    for (int delta = 0; delta <= 4; ++delta)
        for (int r = 0; r <= 3; ++r) {
            WeightCrosscheckReport report = weight_crosscheck(delta, r, 8);
            CHECK(report.pass);
        }
    // the nodal weight series agrees with the weight specialization of the
    // motivic curve series for a one-node rational curve
    GermRegistry registry;
    CurveSpec curve;
    curve.germs.push_back(registry.require("node"));
    QSeries motivic = weight_specialize(curve_series(curve, Ring::lefschetz, 6));
    QSeries closed = nodal_weight_series(1, 0, 6);
    CHECK(motivic == closed);
}

TEST_CASE("germ registry JSON round trip") {
    GermRegistry registry;
    std::string text = registry.to_json_text();
    GermRegistry reloaded;
    reloaded.load_json_text(text);
    CHECK(reloaded.to_json_text() == text);
    for (const std::string& label : GermRegistry::builtin_labels()) {
        const GermSpec* a = registry.find(label);
        const GermSpec* b = reloaded.find(label);
        REQUIRE(a);
        REQUIRE(b);
        CHECK(*a->local_factor == *b->local_factor);
        CHECK(a->branches == b->branches);
        CHECK(a->cogenus == b->cogenus);
    }
}

TEST_CASE("registry rejects invalid factors") {
    GermRegistry registry;
    GermSpec bad;
    bad.label = "bad";
    bad.branches = 1;
    bad.cogenus = 1;
    bad.local_factor = QPoly(Ring::lefschetz, {IntPoly(1), IntPoly(1)}); // degree 1 != 2
    CHECK_THROWS_AS(registry.add(bad), Error);

    GermSpec asym;
    asym.label = "asym";
    asym.branches = 1;
    asym.cogenus = 1;
    // degree 2, constant 1, but fails the functional equation
    asym.local_factor = QPoly(Ring::lefschetz, {IntPoly(1), IntPoly(1), IntPoly(1)});
    CHECK_THROWS_AS(registry.add(asym), Error);
}
