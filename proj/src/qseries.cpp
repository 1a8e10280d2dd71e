#include "hilbzeta/qseries.hpp"
#include "hilbzeta/error.hpp"

namespace hilbzeta {

const char* ring_name(Ring ring) {
    return ring == Ring::lefschetz ? "lefschetz" : "weight";
}

const char* ring_variable(Ring ring) {
    return ring == Ring::lefschetz ? "L" : "t";
}

namespace {
void require_same_ring(Ring a, Ring b, const char* what) {
    if (a != b)
        fail(Error::Kind::ring_mismatch,
             std::string(what) + ": operands live in different coefficient rings (" +
                 ring_name(a) + " vs " + ring_name(b) + ")");
}
} // namespace

QPoly::QPoly(Ring ring, std::vector<IntPoly> ascending_q_coeffs)
    : ring_(ring), coeffs_(std::move(ascending_q_coeffs)) {
    normalize();
}

QPoly QPoly::one(Ring ring) {
    return QPoly(ring, {IntPoly(1)});
}

QPoly QPoly::q_monomial(Ring ring, int q_power, IntPoly coeff) {
    if (q_power < 0) fail(Error::Kind::argument, "negative q power");
    std::vector<IntPoly> cs(static_cast<size_t>(q_power) + 1);
    cs.back() = std::move(coeff);
    return QPoly(ring, std::move(cs));
}

void QPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

IntPoly QPoly::coeff(int q_power) const {
    if (q_power < 0 || q_power >= static_cast<int>(coeffs_.size())) return IntPoly();
    return coeffs_[static_cast<size_t>(q_power)];
}

int QPoly::max_coeff_degree() const {
    int deg = -1;
    for (const IntPoly& c : coeffs_) deg = std::max(deg, c.degree());
    return deg;
}

QPoly QPoly::operator-() const {
    QPoly out = *this;
    for (IntPoly& c : out.coeffs_) c = -c;
    return out;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
    require_same_ring(ring_, rhs.ring_, "polynomial addition");
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
    require_same_ring(ring_, rhs.ring_, "polynomial subtraction");
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
    require_same_ring(lhs.ring_, rhs.ring_, "polynomial multiplication");
    QPoly out(lhs.ring_);
    if (lhs.is_zero() || rhs.is_zero()) return out;
    out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, IntPoly());
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    out.normalize();
    return out;
}

QPoly QPoly::pow(unsigned exponent) const {
    QPoly result = QPoly::one(ring_), base = *this;
    while (exponent) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

QSeries::QSeries(Ring ring, int truncation) : ring_(ring), truncation_(truncation) {
    if (truncation < 0) fail(Error::Kind::argument, "negative series truncation");
    coeffs_.assign(static_cast<size_t>(truncation) + 1, IntPoly());
}

QSeries::QSeries(Ring ring, int truncation, std::vector<IntPoly> coeffs)
    : ring_(ring), truncation_(truncation), coeffs_(std::move(coeffs)) {
    if (truncation < 0) fail(Error::Kind::argument, "negative series truncation");
    if (coeffs_.size() != static_cast<size_t>(truncation) + 1)
        fail(Error::Kind::argument, "series coefficient count does not match truncation");
}

QSeries QSeries::from_poly(const QPoly& poly, int truncation) {
    QSeries out(poly.ring(), truncation);
    for (int d = 0; d <= truncation; ++d) out.coeffs_[static_cast<size_t>(d)] = poly.coeff(d);
    return out;
}

const IntPoly& QSeries::coeff(int q_power) const {
    if (q_power < 0) fail(Error::Kind::argument, "negative q power");
    if (q_power > truncation_)
        fail(Error::Kind::truncation,
             "coefficient of q^" + std::to_string(q_power) +
                 " is undefined beyond truncation " + std::to_string(truncation_));
    return coeffs_[static_cast<size_t>(q_power)];
}

void QSeries::set_coeff(int q_power, IntPoly value) {
    if (q_power < 0 || q_power > truncation_)
        fail(Error::Kind::truncation, "coefficient index outside truncation");
    coeffs_[static_cast<size_t>(q_power)] = std::move(value);
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    require_same_ring(a.ring_, b.ring_, "series addition");
    int n = std::min(a.truncation_, b.truncation_);
    QSeries out(a.ring_, n);
    for (int d = 0; d <= n; ++d)
        out.coeffs_[static_cast<size_t>(d)] = a.coeffs_[static_cast<size_t>(d)] + b.coeffs_[static_cast<size_t>(d)];
    return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    require_same_ring(a.ring_, b.ring_, "series subtraction");
    int n = std::min(a.truncation_, b.truncation_);
    QSeries out(a.ring_, n);
    for (int d = 0; d <= n; ++d)
        out.coeffs_[static_cast<size_t>(d)] = a.coeffs_[static_cast<size_t>(d)] - b.coeffs_[static_cast<size_t>(d)];
    return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    require_same_ring(a.ring_, b.ring_, "series multiplication");
    int n = std::min(a.truncation_, b.truncation_);
    QSeries out(a.ring_, n);
    for (int d = 0; d <= n; ++d) {
        IntPoly acc;
        for (int i = 0; i <= d; ++i)
            acc += a.coeffs_[static_cast<size_t>(i)] * b.coeffs_[static_cast<size_t>(d - i)];
        out.coeffs_[static_cast<size_t>(d)] = std::move(acc);
    }
    return out;
}

QSeries QSeries::operator*(const QPoly& poly) const {
    require_same_ring(ring_, poly.ring(), "series by polynomial multiplication");
    QSeries out(ring_, truncation_);
    for (int d = 0; d <= truncation_; ++d) {
        IntPoly acc;
        for (int i = 0; i <= std::min(d, poly.degree()); ++i)
            acc += poly.coeff(i) * coeffs_[static_cast<size_t>(d - i)];
        out.coeffs_[static_cast<size_t>(d)] = std::move(acc);
    }
    return out;
}

QSeries QSeries::invert_unit() const {
    if (!coeffs_[0].is_one())
        fail(Error::Kind::argument,
             "series inversion requires constant coefficient 1, got " +
                 coeffs_[0].to_string(ring_variable(ring_)));
    QSeries out(ring_, truncation_);
    out.coeffs_[0] = IntPoly(1);
    for (int d = 1; d <= truncation_; ++d) {
        IntPoly acc;
        for (int k = 1; k <= d; ++k)
            acc += coeffs_[static_cast<size_t>(k)] * out.coeffs_[static_cast<size_t>(d - k)];
        out.coeffs_[static_cast<size_t>(d)] = -acc;
    }
    return out;
}

bool operator==(const QSeries& a, const QSeries& b) {
    return a.ring_ == b.ring_ && a.truncation_ == b.truncation_ && a.coeffs_ == b.coeffs_;
}

bool QSeries::agrees_with(const QSeries& other) const {
    if (ring_ != other.ring_) return false;
    int n = std::min(truncation_, other.truncation_);
    for (int d = 0; d <= n; ++d)
        if (coeffs_[static_cast<size_t>(d)] != other.coeffs_[static_cast<size_t>(d)]) return false;
    return true;
}

QPoly laurent_substitute(const QPoly& poly, int delta) {
    if (poly.ring() != Ring::lefschetz)
        fail(Error::Kind::ring_mismatch, "Laurent substitution is defined over the Lefschetz ring");
    if (delta < 0) fail(Error::Kind::argument, "negative exponent in Laurent substitution");
    std::vector<IntPoly> out(static_cast<size_t>(2 * delta) + 1);
    std::vector<std::vector<BigInt>> grid(out.size());
    for (int d = 0; d <= poly.degree(); ++d) {
        const IntPoly c = poly.coeff(d);
        for (int k = 0; k <= c.degree(); ++k) {
            BigInt a = c.coeff(k);
            if (a.is_zero()) continue;
            int qd = 2 * delta - d;
            int lk = delta - d + k;
            if (qd < 0)
                fail(Error::Kind::degree,
                     "q-degree " + std::to_string(d) + " exceeds 2*delta = " + std::to_string(2 * delta) +
                         "; a negative power of q survives the substitution");
            if (lk < 0)
                fail(Error::Kind::degree,
                     "monomial q^" + std::to_string(d) + "*L^" + std::to_string(k) +
                         " leaves a negative power of L after the substitution");
            auto& row = grid[static_cast<size_t>(qd)];
            if (row.size() <= static_cast<size_t>(lk)) row.resize(static_cast<size_t>(lk) + 1);
            row[static_cast<size_t>(lk)] += a;
        }
    }
    for (size_t i = 0; i < out.size(); ++i) out[i] = IntPoly::from_coeffs(std::move(grid[i]));
    return QPoly(Ring::lefschetz, std::move(out));
}

IntPoly euler_specialize(const QPoly& poly) {
    if (poly.ring() != Ring::lefschetz)
        fail(Error::Kind::ring_mismatch, "Euler specialization is defined over the Lefschetz ring");
    std::vector<BigInt> out;
    out.reserve(static_cast<size_t>(poly.degree()) + 1);
    for (int d = 0; d <= poly.degree(); ++d) out.push_back(poly.coeff(d).coeff_sum());
    return IntPoly::from_coeffs(std::move(out));
}

IntPoly weight_specialize_coeff(const IntPoly& lpoly) {
    return lpoly.exponent_doubled();
}

QPoly weight_specialize(const QPoly& poly) {
    if (poly.ring() != Ring::lefschetz)
        fail(Error::Kind::ring_mismatch, "weight specialization maps the Lefschetz ring to the weight ring");
    std::vector<IntPoly> out;
    out.reserve(static_cast<size_t>(poly.degree()) + 1);
    for (int d = 0; d <= poly.degree(); ++d) out.push_back(poly.coeff(d).exponent_doubled());
    return QPoly(Ring::weight, std::move(out));
}

QSeries weight_specialize(const QSeries& series) {
    if (series.ring() != Ring::lefschetz)
        fail(Error::Kind::ring_mismatch, "weight specialization maps the Lefschetz ring to the weight ring");
    QSeries out(Ring::weight, series.truncation());
    for (int d = 0; d <= series.truncation(); ++d)
        out.set_coeff(d, series.coeff(d).exponent_doubled());
    return out;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    const std::string var = ring_variable(ring_);
    std::string out;
    for (int d = 0; d <= degree(); ++d) {
        const IntPoly& c = coeffs_[static_cast<size_t>(d)];
        if (c.is_zero()) continue;

        // single monomial coefficients are rendered inline, composite ones in parens
        int nonzero = 0, power = 0;
        for (int k = 0; k <= c.degree(); ++k)
            if (!c.coeff(k).is_zero()) { ++nonzero; power = k; }

        std::string term;
        bool negative = false;
        if (nonzero == 1) {
            BigInt a = c.coeff(power);
            negative = a.is_negative();
            BigInt mag = a.abs();
            std::string piece;
            if (!mag.is_one() || (d == 0 && power == 0)) piece = mag.to_string();
            if (d > 0) {
                if (!piece.empty()) piece += "*";
                piece += "q";
                if (d > 1) piece += "^" + std::to_string(d);
            }
            if (power > 0) {
                if (!piece.empty()) piece += "*";
                piece += var;
                if (power > 1) piece += "^" + std::to_string(power);
            }
            term = piece;
        } else {
            std::string inner = c.to_string(var);
            if (d == 0) {
                term = inner;
            } else {
                term = "q";
                if (d > 1) term += "^" + std::to_string(d);
                term += "*(" + inner + ")";
            }
        }

        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += term;
    }
    return out;
}

std::string QSeries::to_string() const {
    std::string out;
    const std::string var = ring_variable(ring_);
    for (int d = 0; d <= truncation_; ++d) {
        if (d) out += "; ";
        out += "q^" + std::to_string(d) + ": " + coeffs_[static_cast<size_t>(d)].to_string(var);
    }
    return out;
}

} // namespace hilbzeta
