#include "hilbzeta/ranks.hpp"
#include "hilbzeta/error.hpp"

namespace hilbzeta {

bool RankTable::palindromic() const {
    size_t n = ranks.size();
    for (size_t i = 0; i < n / 2; ++i)
        if (ranks[i] != ranks[n - 1 - i]) return false;
    return true;
}

std::string RankTable::to_string() const {
    std::string out;
    for (size_t i = 0; i < ranks.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(ranks[i]);
    }
    return out;
}

long long binomial(int n, int k) {
    if (n < 0 || n > 62) fail(Error::Kind::argument, "binomial range supported up to n = 62");
    if (k < 0 || k > n) return 0;
    // Pascal row; values fit comfortably in 64 bits for n <= 62
    std::vector<long long> row(static_cast<size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j > 0; --j) row[static_cast<size_t>(j)] += row[static_cast<size_t>(j - 1)];
    return row[static_cast<size_t>(k)];
}

RankTable macdonald_ranks(int g, int d) {
    if (g < 0 || d < 0) fail(Error::Kind::argument, "genus and degree must be non-negative");
    RankTable table;
    table.context = RankTable::Context::hilbert;
    table.g = g;
    table.d = d;
    table.ranks.assign(static_cast<size_t>(2 * d) + 1, 0);
    for (int i = 0; i <= d; ++i) {
        long long r = 0;
        for (int k = 0; 2 * k <= i; ++k) r += binomial(2 * g, i - 2 * k);
        table.ranks[static_cast<size_t>(i)] = r;
        table.ranks[static_cast<size_t>(2 * d - i)] = r;
    }
    return table;
}

RankTable jacobian_ranks(int g) {
    if (g < 0) fail(Error::Kind::argument, "genus must be non-negative");
    RankTable table;
    table.context = RankTable::Context::jacobian;
    table.g = g;
    table.ranks.assign(static_cast<size_t>(2 * g) + 1, 0);
    for (int i = 0; i <= 2 * g; ++i) table.ranks[static_cast<size_t>(i)] = binomial(2 * g, i);
    return table;
}

RankTable hilb_from_jac(int g, int d) {
    RankTable jac = jacobian_ranks(g);
    RankTable table;
    table.context = RankTable::Context::hilbert;
    table.g = g;
    table.d = d;
    table.ranks.assign(static_cast<size_t>(2 * d) + 1, 0);
    for (int i = 0; i <= d; ++i) {
        long long r = 0;
        for (int k = 0; 2 * k <= i; ++k) {
            int j = i - 2 * k;
            if (j <= 2 * g) r += jac.ranks[static_cast<size_t>(j)];
        }
        table.ranks[static_cast<size_t>(i)] = r;
        table.ranks[static_cast<size_t>(2 * d - i)] = r;
    }
    return table;
}

CheckReport series_identity_check(int g, int truncation) {
    CheckReport report;
    // left side: per-degree rank tables with weight t^i attached to R^i
    QSeries lhs(Ring::weight, truncation);
    for (int d = 0; d <= truncation; ++d) {
        RankTable table = macdonald_ranks(g, d);
        std::vector<BigInt> coeffs(table.ranks.size());
        for (size_t i = 0; i < table.ranks.size(); ++i) coeffs[i] = BigInt(table.ranks[i]);
        lhs.set_coeff(d, IntPoly::from_coeffs(std::move(coeffs)));
    }
    // right side: binomial numerator over (1-q)(1-t^2 q)
    QPoly numerator(Ring::weight);
    for (int i = 0; i <= 2 * g; ++i)
        numerator += QPoly::q_monomial(Ring::weight, i, IntPoly::monomial(i, BigInt(binomial(2 * g, i))));
    QPoly denom = QPoly(Ring::weight, {IntPoly(1), IntPoly(-1)}) *
                  QPoly(Ring::weight, {IntPoly(1), -IntPoly::monomial(2)});
    QSeries rhs = QSeries::from_poly(numerator, truncation) *
                  QSeries::from_poly(denom, truncation).invert_unit();
    for (int d = 0; d <= truncation; ++d) {
        if (lhs.coeff(d) != rhs.coeff(d)) {
            report.pass = false;
            report.detail = "mismatch at q^" + std::to_string(d) + ": rank side " +
                            lhs.coeff(d).to_string("t") + ", series side " + rhs.coeff(d).to_string("t");
            return report;
        }
    }
    return report;
}

std::vector<long long> perverse_relation(const std::vector<long long>& jac_input, int g, int d) {
    if (g < 0 || d < 0) fail(Error::Kind::argument, "genus and degree must be non-negative");
    if (jac_input.size() != static_cast<size_t>(2 * g) + 1)
        fail(Error::Kind::argument, "perverse input must be indexed -g..g (size 2g+1)");
    for (int j = 0; j <= 2 * g; ++j)
        if (jac_input[static_cast<size_t>(j)] != jac_input[static_cast<size_t>(2 * g - j)])
            fail(Error::Kind::argument,
                 "perverse input violates relative hard Lefschetz symmetry at offset " +
                     std::to_string(j - g));
    auto input_at = [&](int j) -> long long {
        if (j < -g || j > g) return 0;
        return jac_input[static_cast<size_t>(j + g)];
    };
    std::vector<long long> out(static_cast<size_t>(2 * d) + 1, 0);
    for (int i = 0; i <= d; ++i) {
        long long acc = 0;
        for (int k = 0; 2 * k <= i; ++k) acc += input_at(i - g - 2 * k);
        out[static_cast<size_t>(i)] = acc;       // index i-d
        out[static_cast<size_t>(2 * d - i)] = acc; // duality: output(d-i)
    }
    return out;
}

} // namespace hilbzeta
