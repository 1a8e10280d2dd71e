#include <doctest.h>

#include "hilbzeta/error.hpp"
#include "hilbzeta/qseries.hpp"

#include <random>

using namespace hilbzeta;

namespace {

QPoly lef(std::vector<IntPoly> cs) { return QPoly(Ring::lefschetz, std::move(cs)); }

} // namespace

TEST_CASE("geometric series inversions") {
    // (1-q)^-1 = 1 + q + q^2 + ...
    QSeries s = QSeries::from_poly(lef({IntPoly(1), IntPoly(-1)}), 6).invert_unit();
    for (int d = 0; d <= 6; ++d) CHECK(s.coeff(d) == IntPoly(1));

    // (1-qL)^-1 = 1 + qL + q^2 L^2 + ...
    QSeries t = QSeries::from_poly(lef({IntPoly(1), -IntPoly::monomial(1)}), 5).invert_unit();
    for (int d = 0; d <= 5; ++d) CHECK(t.coeff(d) == IntPoly::monomial(d));

    // inverse of the node factor multiplies back to 1
    QPoly node = lef({IntPoly(1), IntPoly(-1), IntPoly::monomial(1)});
    QSeries node_series = QSeries::from_poly(node, 8);
    QSeries product = node_series.invert_unit() * node_series;
    CHECK(product.coeff(0) == IntPoly(1));
    for (int d = 1; d <= 8; ++d) CHECK(product.coeff(d).is_zero());
}

TEST_CASE("inversion requires unit constant term") {
    QSeries bad = QSeries::from_poly(lef({IntPoly(2), IntPoly(1)}), 3);
    CHECK_THROWS_AS((void)bad.invert_unit(), Error);
}

TEST_CASE("series inversion round trip on random unit series") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> ldeg(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        QSeries u(Ring::lefschetz, 6);
        u.set_coeff(0, IntPoly(1));
        for (int d = 1; d <= 6; ++d) {
            std::vector<BigInt> cs;
            int top = ldeg(rng);
            for (int k = 0; k <= top; ++k) cs.push_back(BigInt(coeff(rng)));
            u.set_coeff(d, IntPoly::from_coeffs(std::move(cs)));
        }
        QSeries product = u * u.invert_unit();
        CHECK(product.coeff(0) == IntPoly(1));
        for (int d = 1; d <= 6; ++d) CHECK(product.coeff(d).is_zero());
    }
}

TEST_CASE("truncation semantics") {
    QSeries a(Ring::lefschetz, 5), b(Ring::lefschetz, 3);
    CHECK((a + b).truncation() == 3);
    CHECK((a * b).truncation() == 3);
    CHECK_THROWS_AS((void)b.coeff(4), Error);
    QSeries w(Ring::weight, 5);
    CHECK_THROWS_AS((void)(a + w), Error);
}

TEST_CASE("polynomial ring mismatch is rejected") {
    QPoly a = lef({IntPoly(1)});
    QPoly b(Ring::weight, {IntPoly(1)});
    CHECK_THROWS_AS((void)(a * b), Error);
    CHECK_THROWS_AS((void)(a + b), Error);
}

TEST_CASE("laurent substitution on the node factor") {
    QPoly node = lef({IntPoly(1), IntPoly(-1), IntPoly::monomial(1)});
    CHECK(laurent_substitute(node, 1) == node); // the paper's 1 - q + q^2 L is fixed

    QPoly one = QPoly::one(Ring::lefschetz);
    CHECK(laurent_substitute(one, 0) == one);

    // z = 1 - qL + q^2 L: (q^2 L) z(1/(qL)) = q^2 L - qL + 1, again a fixed point
    QPoly z = lef({IntPoly(1), -IntPoly::monomial(1), IntPoly::monomial(1)});
    CHECK(laurent_substitute(z, 1) == z);

    // an asymmetric input moves: 1 - q maps to q^2 L - q
    QPoly asym = lef({IntPoly(1), IntPoly(-1)});
    QPoly image = laurent_substitute(asym, 1);
    CHECK(image == lef({IntPoly(), IntPoly(-1), IntPoly::monomial(1)}));
    CHECK(image != asym);
}

TEST_CASE("laurent substitution reports degree violations") {
    // q^3 with delta = 1 leaves a negative q power
    CHECK_THROWS_AS((void)laurent_substitute(QPoly::q_monomial(Ring::lefschetz, 3, IntPoly(1)), 1), Error);
    // constant coefficient in the top q-degree leaves a negative L power
    QPoly bad = lef({IntPoly(1), IntPoly(), IntPoly(1)});
    CHECK_THROWS_AS((void)laurent_substitute(bad, 1), Error);
}

TEST_CASE("laurent substitution is an involution on random admissible inputs") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> delta_dist(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        int delta = delta_dist(rng);
        // admissible: q-degree <= 2*delta, each q^d coefficient with L-degrees in
        // [max(0, d-delta), delta] so that no negative power survives
        std::vector<IntPoly> cs(static_cast<size_t>(2 * delta) + 1);
        for (int d = 0; d <= 2 * delta; ++d) {
            std::vector<BigInt> row(static_cast<size_t>(delta) + 1);
            for (int k = std::max(0, d - delta); k <= delta; ++k) row[static_cast<size_t>(k)] = BigInt(coeff(rng));
            cs[static_cast<size_t>(d)] = IntPoly::from_coeffs(std::move(row));
        }
        QPoly z = lef(std::move(cs));
        QPoly twice = laurent_substitute(laurent_substitute(z, delta), delta);
        CHECK(twice == z);
    }
}

TEST_CASE("specializations") {
    QPoly node = lef({IntPoly(1), IntPoly(-1), IntPoly::monomial(1)});
    // Euler: L -> 1 gives 1 - q + q^2 over Z
    CHECK(euler_specialize(node) == IntPoly{1, -1, 1});
    CHECK(IntPoly{1, 2}.coeff_sum() == BigInt(3)); // 1 + 2L at L = 1
    // weight: L -> t^2 gives the delta factor of the nodal weight formula
    QPoly w = weight_specialize(node);
    CHECK(w.ring() == Ring::weight);
    CHECK(w == QPoly(Ring::weight, {IntPoly(1), IntPoly(-1), IntPoly::monomial(2)}));
    CHECK(IntPoly::monomial(2).exponent_doubled() == IntPoly::monomial(4)); // L^2 -> t^4
}

TEST_CASE("euler specialization is a ring homomorphism") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> qdeg(0, 4), ldeg(0, 3);
    auto random_qpoly = [&] {
        std::vector<IntPoly> cs(static_cast<size_t>(qdeg(rng)) + 1);
        for (auto& c : cs) {
            std::vector<BigInt> row(static_cast<size_t>(ldeg(rng)) + 1);
            for (auto& v : row) v = BigInt(coeff(rng));
            c = IntPoly::from_coeffs(std::move(row));
        }
        return lef(std::move(cs));
    };
    for (int trial = 0; trial < 200; ++trial) {
        QPoly a = random_qpoly(), b = random_qpoly();
        CHECK(euler_specialize(a * b) == euler_specialize(a) * euler_specialize(b));
        CHECK(euler_specialize(a + b) == euler_specialize(a) + euler_specialize(b));
    }
}

TEST_CASE("canonical rendering") {
    QPoly node = lef({IntPoly(1), IntPoly(-1), IntPoly::monomial(1)});
    CHECK(node.to_string() == "1 - q + q^2*L");
    QPoly node_sq = node * node;
    CHECK(node_sq.to_string() == "1 - 2*q + q^2*(1 + 2*L) - 2*q^3*L + q^4*L^2");
    CHECK(QPoly(Ring::weight, {IntPoly{1, 2, 1}}).to_string() == "1 + 2*t + t^2");
    CHECK(QPoly(Ring::lefschetz).to_string() == "0");
}
