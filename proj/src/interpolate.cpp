#include "hilbzeta/interpolate.hpp"
#include "hilbzeta/error.hpp"
#include "hilbzeta/rational.hpp"

namespace hilbzeta {

InterpolationResult interpolate_exact(const std::vector<std::pair<BigInt, BigInt>>& samples,
                                      int max_degree) {
    if (max_degree < 0) fail(Error::Kind::argument, "negative interpolation degree");
    size_t need = static_cast<size_t>(max_degree) + 1;
    if (samples.size() < need)
        fail(Error::Kind::argument, "interpolation needs at least " + std::to_string(need) +
                                        " samples, got " + std::to_string(samples.size()));
    for (size_t i = 0; i < samples.size(); ++i)
        for (size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                fail(Error::Kind::argument, "interpolation sample points must be distinct");

    // Newton divided differences on the first max_degree+1 samples.
    std::vector<BigRational> diffs;
    diffs.reserve(need);
    for (size_t i = 0; i < need; ++i) diffs.emplace_back(samples[i].second);
    for (size_t level = 1; level < need; ++level) {
        for (size_t i = need - 1; i >= level; --i) {
            BigRational dx(samples[i].first - samples[i - level].first);
            diffs[i] = (diffs[i] - diffs[i - 1]) / dx;
            if (i == level) break;
        }
    }

    // Expand the Newton form sum diffs[k] * prod_{j<k} (x - x_j).
    std::vector<BigRational> coeffs(need, BigRational());
    std::vector<BigRational> basis = {BigRational(BigInt(1))}; // current product, ascending powers
    for (size_t k = 0; k < need; ++k) {
        for (size_t j = 0; j < basis.size(); ++j) coeffs[j] += diffs[k] * basis[j];
        if (k + 1 < need) {
            std::vector<BigRational> next(basis.size() + 1, BigRational());
            BigRational root(samples[k].first);
            for (size_t j = 0; j < basis.size(); ++j) {
                next[j + 1] += basis[j];
                next[j] -= basis[j] * root;
            }
            basis = std::move(next);
        }
    }

    InterpolationResult result;
    std::vector<BigInt> integral(need);
    for (size_t j = 0; j < need; ++j) {
        if (!coeffs[j].is_integer()) {
            result.diagnostic = "not polynomial-count: coefficient of degree " + std::to_string(j) +
                                " is non-integral (" + coeffs[j].numerator().to_string() + "/" +
                                coeffs[j].denominator().to_string() + ")";
            return result;
        }
        integral[j] = coeffs[j].numerator();
    }
    IntPoly poly = IntPoly::from_coeffs(std::move(integral));

    for (size_t i = need; i < samples.size(); ++i) {
        BigInt predicted = poly.eval(samples[i].first);
        if (predicted != samples[i].second) {
            result.diagnostic = "not polynomial-count: surplus sample at point " +
                                samples[i].first.to_string() + " gives " + samples[i].second.to_string() +
                                ", fitted polynomial predicts " + predicted.to_string();
            return result;
        }
    }
    result.poly = std::move(poly);
    return result;
}

} // namespace hilbzeta
