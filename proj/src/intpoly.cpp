#include "hilbzeta/intpoly.hpp"
#include "hilbzeta/error.hpp"

namespace hilbzeta {

IntPoly::IntPoly(long long constant) {
    if (constant != 0) coeffs_.push_back(BigInt(constant));
}

IntPoly::IntPoly(BigInt constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::initializer_list<long long> ascending_coeffs) {
    coeffs_.reserve(ascending_coeffs.size());
    for (long long c : ascending_coeffs) coeffs_.push_back(BigInt(c));
    normalize();
}

IntPoly IntPoly::monomial(int power, BigInt coeff) {
    if (power < 0) fail(Error::Kind::argument, "negative monomial power");
    IntPoly p;
    if (coeff.is_zero()) return p;
    p.coeffs_.assign(static_cast<size_t>(power) + 1, BigInt());
    p.coeffs_.back() = std::move(coeff);
    return p;
}

IntPoly IntPoly::from_coeffs(std::vector<BigInt> ascending) {
    IntPoly p;
    p.coeffs_ = std::move(ascending);
    p.normalize();
    return p;
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigInt IntPoly::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return BigInt();
    return coeffs_[static_cast<size_t>(power)];
}

bool IntPoly::has_negative_coeff() const {
    for (const BigInt& c : coeffs_)
        if (c.is_negative()) return true;
    return false;
}

IntPoly IntPoly::operator-() const {
    IntPoly out = *this;
    for (BigInt& c : out.coeffs_) c = -c;
    return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    IntPoly out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt());
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    out.normalize();
    return out;
}

IntPoly& IntPoly::scale(const BigInt& factor) {
    if (factor.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (BigInt& c : coeffs_) c *= factor;
    return *this;
}

IntPoly IntPoly::pow(unsigned exponent) const {
    IntPoly result(1), base = *this;
    while (exponent) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

BigInt IntPoly::eval(const BigInt& point) const {
    BigInt acc;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * point + coeffs_[i];
    return acc;
}

BigInt IntPoly::coeff_sum() const {
    BigInt acc;
    for (const BigInt& c : coeffs_) acc += c;
    return acc;
}

IntPoly IntPoly::exponent_doubled() const {
    IntPoly out;
    if (is_zero()) return out;
    out.coeffs_.assign(coeffs_.size() * 2 - 1, BigInt());
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[2 * i] = coeffs_[i];
    return out;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c.is_zero()) continue;
        BigInt a = c.abs();
        if (out.empty()) {
            if (c.is_negative()) out += "-";
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        if (i == 0) {
            out += a.to_string();
        } else {
            if (!a.is_one()) {
                out += a.to_string();
                out += "*";
            }
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

size_t IntPoly::hash() const {
    size_t h = 0x243f6a8885a308d3ull;
    for (const BigInt& c : coeffs_) h = h * 1099511628211ull ^ c.hash();
    return h;
}

} // namespace hilbzeta
