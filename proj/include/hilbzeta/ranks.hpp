#pragma once

#include "hilbzeta/qseries.hpp"

#include <string>
#include <vector>

namespace hilbzeta {

// Integer rank table of a direct-image decomposition, indexed by
// cohomological degree.  Hilbert tables live on [0, 2d] and satisfy
// rank(i) = rank(2d-i); Jacobian tables live on [0, 2g] with binomial ranks.
struct RankTable {
    enum class Context { hilbert, jacobian };
    Context context = Context::jacobian;
    int g = 0;
    int d = 0; // meaningful for hilbert tables
    std::vector<long long> ranks;

    bool palindromic() const;
    std::string to_string() const; // space-separated ranks
};

long long binomial(int n, int k);

// rank(i) = sum_k C(2g, i-2k) for i <= d, extended by rank(i) = rank(2d-i).
RankTable macdonald_ranks(int g, int d);

// rank(i) = C(2g, i) on [0, 2g].
RankTable jacobian_ranks(int g);

// rank(i) = sum_k jacobian_rank(i-2k) for i <= d, duality-extended;
// must coincide with macdonald_ranks(g, d).
RankTable hilb_from_jac(int g, int d);

struct CheckReport {
    bool pass = true;
    std::string detail;
};

// Verifies that the weight-graded rank series
//   sum_d q^d sum_i rank_{g,d}(i) t^i
// equals (sum_i C(2g,i) t^i q^i) / ((1-q)(1-t^2 q)) up to the truncation.
CheckReport series_identity_check(int g, int truncation);

// Perverse filtration bookkeeping: input ranks of the Jacobian family
// indexed -g..g (must be symmetric), output ranks indexed -d..d via
// output(i-d) = sum_k input(i-g-2k) for 0 <= i <= d, duality-extended.
std::vector<long long> perverse_relation(const std::vector<long long>& jac_input, int g, int d);

} // namespace hilbzeta
