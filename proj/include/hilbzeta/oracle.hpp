#pragma once

#include "hilbzeta/intpoly.hpp"
#include "hilbzeta/qseries.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hilbzeta {

// Bivariate integer polynomial in x and y, sparse representation.
// Parsed from the minimal germ syntax: integers, x, y, + - * ^, parentheses.
class BivarPoly {
public:
    static BivarPoly parse(std::string_view text); // throws Error(parse)

    const std::map<std::pair<int, int>, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt constant_term() const;
    int order() const; // minimal total degree of a nonzero term, -1 if zero
    int order_mod(uint32_t p) const;

    void add_term(int dx, int dy, BigInt coeff);
    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    BivarPoly pow(unsigned exponent) const;

    std::string to_string() const;

private:
    std::map<std::pair<int, int>, BigInt> terms_;
    void prune();
};

// Explicit plane-curve germ for the oracle: equation with f(0,0) = 0 plus
// the declared branch count and cogenus.  These declared invariants are not
// recomputed; they are validated downstream (the fitted factor must have
// q-degree 2*cogenus).
struct GermEq {
    std::string label;
    BivarPoly f;
    int branches = 1;
    int cogenus = 0;
};
GermEq make_germ_eq(std::string label, std::string_view equation, int branches, int cogenus);

// The finite algebra A = F_p[[x,y]] / ((f) + m^N) with its monomial basis
// and multiplication-by-x and -by-y matrices.  Every colength-n ideal of the
// local ring contains m^n, so counting at truncation N = n is exact.
class FiniteQuotient {
public:
    static FiniteQuotient build(const BivarPoly& f, uint32_t p, int truncation);

    uint32_t prime() const { return p_; }
    int truncation() const { return truncation_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::pair<int, int>>& basis() const { return basis_; }

    // column-major: column j holds the image of basis element j
    const std::vector<std::vector<uint32_t>>& mult_x() const { return mult_x_; }
    const std::vector<std::vector<uint32_t>>& mult_y() const { return mult_y_; }

    // reorder the basis (testing hook: counts must be invariant)
    void permute_basis(const std::vector<int>& perm);

    // number of ideals of each colength 0..max_colength (socle-chain walk)
    std::vector<long long> count_ideals_by_colength(int max_colength) const;

private:
    uint32_t p_ = 0;
    int truncation_ = 0;
    std::vector<std::pair<int, int>> basis_;
    std::vector<std::vector<uint32_t>> mult_x_;
    std::vector<std::vector<uint32_t>> mult_y_;
};

long long count_ideals(const FiniteQuotient& quotient, int colength);

// Per-colength oracle outcome: raw counts per prime and the fitted class.
struct OracleFit {
    int n = 0;
    std::vector<std::pair<uint32_t, long long>> samples;
    std::optional<IntPoly> cls; // polynomial in L, degree <= max(0, n-1)
    std::string diagnostic;     // set when cls is empty ("not polynomial-count ...")
    bool surplus_checked = false;
};

struct OracleRun {
    GermEq germ;
    std::vector<uint32_t> primes;
    std::vector<OracleFit> fits; // n = 0..n_max
    bool all_fitted = true;

    // (1-q)^branches * sum q^n [fitted class], truncated at n_max
    QSeries assembled_series() const;
    // exact local factor when n_max >= 2*cogenus (degree-2delta polynomial)
    std::optional<QPoly> completed_factor() const;
};

// Count and fit for n = 0..n_max over the given primes; the last primes
// beyond the interpolation degree serve as surplus checks.  Requires at
// least max(n_max, 1) + 1 distinct primes.
OracleRun oracle_fit(const GermEq& germ, int n_max, const std::vector<uint32_t>& primes);

bool is_prime(uint32_t n);

} // namespace hilbzeta
