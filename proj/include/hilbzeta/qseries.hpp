#pragma once

#include "hilbzeta/intpoly.hpp"

#include <string>
#include <vector>

namespace hilbzeta {

// Coefficient ring tag.  Lefschetz means Z[L]; Weight means Z[t].
// Constants live in both rings, so a value is nominally attached to one ring
// and arithmetic rejects mixed-ring operands.
enum class Ring { lefschetz, weight };

const char* ring_name(Ring ring);
const char* ring_variable(Ring ring); // "L" or "t"

// Exact polynomial in the formal variable q over Z[L] or Z[t].
class QPoly {
public:
    explicit QPoly(Ring ring) : ring_(ring) {}
    QPoly(Ring ring, std::vector<IntPoly> ascending_q_coeffs);

    static QPoly one(Ring ring);
    static QPoly q_monomial(Ring ring, int q_power, IntPoly coeff);

    Ring ring() const { return ring_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    IntPoly coeff(int q_power) const;
    const std::vector<IntPoly>& coeffs() const { return coeffs_; }
    int max_coeff_degree() const; // largest L/t-degree among q-coefficients, -1 if zero

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& rhs);
    QPoly& operator-=(const QPoly& rhs);
    friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
    friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
    friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
    QPoly& operator*=(const QPoly& rhs) { return *this = *this * rhs; }
    QPoly pow(unsigned exponent) const;

    friend bool operator==(const QPoly& a, const QPoly& b) {
        return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    std::string to_string() const;

private:
    void normalize();
    Ring ring_;
    std::vector<IntPoly> coeffs_;
};

// Truncated power series in q.  Coefficients beyond the truncation order are
// undefined (access throws); arithmetic between series of different
// truncation yields the minimum truncation, never a silent zero-extension.
class QSeries {
public:
    QSeries(Ring ring, int truncation);
    QSeries(Ring ring, int truncation, std::vector<IntPoly> coeffs_0_to_n);

    static QSeries from_poly(const QPoly& poly, int truncation);

    Ring ring() const { return ring_; }
    int truncation() const { return truncation_; }
    const IntPoly& coeff(int q_power) const; // throws beyond truncation
    void set_coeff(int q_power, IntPoly value);

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries operator*(const QPoly& poly) const;

    // Multiplicative inverse; the constant coefficient must be the unit 1.
    QSeries invert_unit() const;

    // Strict equality: same ring, same truncation, same coefficients.
    friend bool operator==(const QSeries& a, const QSeries& b);
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }
    // Coefficient-wise agreement up to the smaller truncation.
    bool agrees_with(const QSeries& other) const;

    std::string to_string() const;

private:
    Ring ring_;
    int truncation_;
    std::vector<IntPoly> coeffs_;
};

// The substitution Z(q) |-> (q^2 L)^delta * Z(1/(qL)) on Lefschetz-ring
// polynomials.  Monomial q^d L^k maps to q^(2*delta-d) L^(delta-d+k); the
// call reports a degree error if any negative power of q or L survives.
QPoly laurent_substitute(const QPoly& poly, int delta);

// L |-> 1 : Z[L][q] -> Z[q].  Returns a polynomial in q with integer
// coefficients (IntPoly over the variable q).
IntPoly euler_specialize(const QPoly& poly);

// L |-> t^2 : Lefschetz -> weight ring.
IntPoly weight_specialize_coeff(const IntPoly& lpoly);
QPoly weight_specialize(const QPoly& poly);
QSeries weight_specialize(const QSeries& series);

} // namespace hilbzeta
