#include "hilbzeta/zeta.hpp"
#include "hilbzeta/error.hpp"
#include "hilbzeta/ranks.hpp"

namespace hilbzeta {

int CurveSpec::cogenus() const {
    int total = 0;
    for (const GermSpec& germ : germs) total += germ.cogenus;
    return total;
}

QSeries smooth_series(int r, Ring ring, int truncation) {
    if (r < 0) fail(Error::Kind::argument, "normalization genus must be non-negative");
    QSeries out(ring, truncation);
    if (ring == Ring::lefschetz) {
        if (r > 0)
            fail(Error::Kind::ring_mismatch,
                 "classes of positive-genus curves do not lie in Z[L]; use the weight ring for r > 0");
        // Sym^d P^1 = P^d
        for (int d = 0; d <= truncation; ++d) {
            std::vector<BigInt> coeffs(static_cast<size_t>(d) + 1, BigInt(1));
            out.set_coeff(d, IntPoly::from_coeffs(std::move(coeffs)));
        }
        return out;
    }
    // weight ring: (1+tq)^(2r) / ((1-q)(1-t^2 q)), assembled coefficient-wise
    for (int d = 0; d <= truncation; ++d) {
        IntPoly coeff;
        for (int a = 0; a <= std::min(2 * r, d); ++a) {
            BigInt c(binomial(2 * r, a));
            for (int k = 0; a + k <= d; ++k) coeff += IntPoly::monomial(a + 2 * k, c);
        }
        out.set_coeff(d, std::move(coeff));
    }
    return out;
}

QPoly local_factor(const GermSpec& germ) {
    if (germ.local_factor) return *germ.local_factor;
    fail(Error::Kind::unknown_germ,
         "germ '" + germ.label + "' needs oracle data: no local factor is stored" +
             (germ.equation.empty() ? " and no equation is available"
                                    : "; run the oracle on its equation " + germ.equation));
}

QSeries curve_series(const CurveSpec& curve, Ring ring, int truncation) {
    QSeries out = smooth_series(curve.normalization_genus, ring, truncation);
    for (const GermSpec& germ : curve.germs) {
        QPoly factor = local_factor(germ);
        out = out * (ring == Ring::lefschetz ? factor : weight_specialize(factor));
    }
    return out;
}

QPoly zeta_numerator(const CurveSpec& curve) {
    QPoly out = QPoly::one(Ring::lefschetz);
    for (const GermSpec& germ : curve.germs) out *= local_factor(germ);
    return out;
}

QSeries RationalZeta::expand(int truncation) const {
    Ring ring = numerator.ring();
    QPoly one_minus_q(ring, {IntPoly(1), IntPoly(-1)});
    QPoly one_minus_qv(ring, {IntPoly(1), -IntPoly::monomial(ring == Ring::lefschetz ? 1 : 2)});
    QPoly denom = one_minus_q.pow(static_cast<unsigned>(denom_q)) *
                  one_minus_qv.pow(static_cast<unsigned>(denom_qv));
    return QSeries::from_poly(numerator, truncation) *
           QSeries::from_poly(denom, truncation).invert_unit();
}

RationalZeta curve_zeta(const CurveSpec& curve, Ring ring) {
    RationalZeta out{QPoly::one(ring), 1, 1};
    if (ring == Ring::lefschetz) {
        if (curve.normalization_genus > 0)
            fail(Error::Kind::ring_mismatch,
                 "classes of positive-genus curves do not lie in Z[L]; use the weight ring for r > 0");
        out.numerator = zeta_numerator(curve);
        return out;
    }
    QPoly numerator = QPoly(Ring::weight, {IntPoly(1), IntPoly::monomial(1)})
                          .pow(static_cast<unsigned>(2 * curve.normalization_genus));
    for (const GermSpec& germ : curve.germs) numerator *= weight_specialize(local_factor(germ));
    out.numerator = std::move(numerator);
    return out;
}

FunctionalEqReport check_functional_equation(const QPoly& z, int delta) {
    FunctionalEqReport report;
    if (z.ring() != Ring::lefschetz)
        fail(Error::Kind::ring_mismatch, "the functional equation lives over the Lefschetz ring");
    if (delta < 0) fail(Error::Kind::argument, "delta must be non-negative");
    if (z.degree() > 2 * delta) {
        report.detail = "q-degree " + std::to_string(z.degree()) + " exceeds 2*delta = " +
                        std::to_string(2 * delta);
        return report;
    }
    QPoly image(Ring::lefschetz);
    try {
        image = laurent_substitute(z, delta);
    } catch (const Error& e) {
        report.detail = std::string("substitution failed: ") + e.what();
        return report;
    }
    if (image == z) {
        report.pass = true;
        return report;
    }
    for (int d = 0; d <= std::max(image.degree(), z.degree()); ++d) {
        if (image.coeff(d) != z.coeff(d)) {
            report.first_mismatch_q = d;
            report.detail = "mismatch at q^" + std::to_string(d) + ": substitution gives " +
                            image.coeff(d).to_string("L") + ", input has " + z.coeff(d).to_string("L");
            break;
        }
    }
    return report;
}

QSeries nodal_weight_series(int delta, int r, int truncation) {
    if (delta < 0 || r < 0) fail(Error::Kind::argument, "delta and r must be non-negative");
    // (1 - q + t^2 q^2)^delta (1+tq)^(2r) / ((1-q)(1-t^2 q))
    QPoly node_weight(Ring::weight, {IntPoly(1), IntPoly(-1), IntPoly::monomial(2)});
    QPoly one_plus_tq(Ring::weight, {IntPoly(1), IntPoly::monomial(1)});
    QPoly numerator = node_weight.pow(static_cast<unsigned>(delta)) *
                      one_plus_tq.pow(static_cast<unsigned>(2 * r));
    QPoly denom = QPoly(Ring::weight, {IntPoly(1), IntPoly(-1)}) *
                  QPoly(Ring::weight, {IntPoly(1), -IntPoly::monomial(2)});
    return QSeries::from_poly(numerator, truncation) *
           QSeries::from_poly(denom, truncation).invert_unit();
}

WeightCrosscheckReport weight_crosscheck(int delta, int r, int truncation) {
    WeightCrosscheckReport report;
    QSeries closed = nodal_weight_series(delta, r, truncation);
    // motivic route: symmetric-product series times the weight-specialized
    // Lefschetz node factor, multiplied out as a series
    QPoly node_lef(Ring::lefschetz, {IntPoly(1), IntPoly(-1), IntPoly::monomial(1)});
    QSeries motivic = smooth_series(r, Ring::weight, truncation) *
                      weight_specialize(node_lef).pow(static_cast<unsigned>(delta));
    for (int d = 0; d <= truncation; ++d) {
        if (closed.coeff(d) != motivic.coeff(d)) {
            report.first_mismatch_q = d;
            report.detail = "mismatch at q^" + std::to_string(d) + ": closed formula " +
                            closed.coeff(d).to_string("t") + ", motivic route " +
                            motivic.coeff(d).to_string("t");
            return report;
        }
    }
    report.pass = true;
    return report;
}

} // namespace hilbzeta
