#pragma once

#include "hilbzeta/germ.hpp"
#include "hilbzeta/qseries.hpp"

#include <string>
#include <vector>

namespace hilbzeta {

// A global integral curve: normalization genus r plus a list of singularity
// germs.  The arithmetic genus is r + sum of cogenera.
struct CurveSpec {
    int normalization_genus = 0;
    std::vector<GermSpec> germs;

    int cogenus() const;
    int arithmetic_genus() const { return normalization_genus + cogenus(); }
};

// sum_d q^d [Sym^d of the normalization].  Lefschetz ring requires r = 0
// (1/((1-q)(1-qL))); the weight ring gives (1+tq)^(2r)/((1-q)(1-t^2 q)).
QSeries smooth_series(int r, Ring ring, int truncation);

// The germ's local factor; throws unknown_germ naming the germ when no
// factor is stored (route it through the oracle first).
QPoly local_factor(const GermSpec& germ);

// sum_n q^n [C^[n]] = smooth_series(r) * prod_p local_factor(p), with the
// local factors specialized to the requested ring.
QSeries curve_series(const CurveSpec& curve, Ring ring, int truncation);

// Z_C(q) = prod_p local_factor(p), a Lefschetz polynomial of degree
// 2*cogenus with constant term 1.
QPoly zeta_numerator(const CurveSpec& curve);

// Zeta function in rational form: numerator over (1-q)^denom_q times
// (1-qL)^denom_qv (Lefschetz) resp. (1-t^2 q)^denom_qv (weight).
struct RationalZeta {
    QPoly numerator;
    int denom_q = 1;
    int denom_qv = 1;
    QSeries expand(int truncation) const;
};
RationalZeta curve_zeta(const CurveSpec& curve, Ring ring);

struct FunctionalEqReport {
    bool pass = false;
    std::string detail;      // cause or first offending coefficient
    int first_mismatch_q = -1;
};
// PASS iff deg_q Z <= 2*delta and (q^2 L)^delta Z(1/(qL)) == Z.
FunctionalEqReport check_functional_equation(const QPoly& z, int delta);

// sum_d q^d w(H^[d]) = (1-q+t^2 q^2)^delta (1+tq)^(2r) / ((1-q)(1-t^2 q)).
QSeries nodal_weight_series(int delta, int r, int truncation);

struct WeightCrosscheckReport {
    bool pass = false;
    int first_mismatch_q = -1;
    std::string detail;
};
// Compares nodal_weight_series against the weight specialization of the
// motivic product route, coefficient by coefficient.
WeightCrosscheckReport weight_crosscheck(int delta, int r, int truncation);

} // namespace hilbzeta
