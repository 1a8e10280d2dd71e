#pragma once

#include "hilbzeta/bigint.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace hilbzeta {

// Dense univariate polynomial with BigInt coefficients.  This is the
// coefficient ring of every q-series in the library: depending on context the
// variable is L (class of the affine line) or t (weight variable).  Canonical
// form: no trailing zero coefficients; the zero polynomial has an empty
// coefficient vector and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long long constant);
    IntPoly(BigInt constant);
    IntPoly(std::initializer_list<long long> ascending_coeffs);

    static IntPoly monomial(int power, BigInt coeff = BigInt(1));
    static IntPoly from_coeffs(std::vector<BigInt> ascending);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    BigInt coeff(int power) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool has_negative_coeff() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs) { return *this = *this * rhs; }
    IntPoly& scale(const BigInt& factor);
    IntPoly pow(unsigned exponent) const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    BigInt eval(const BigInt& point) const;
    // sum of coefficients, i.e. evaluation at 1 (Euler specialization of L-polynomials)
    BigInt coeff_sum() const;
    // substitute variable^1 -> variable^2 (the L -> t^2 weight specialization)
    IntPoly exponent_doubled() const;

    // canonical rendering, ascending powers, explicit '*' and '^'
    std::string to_string(const std::string& var) const;

    size_t hash() const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

} // namespace hilbzeta
