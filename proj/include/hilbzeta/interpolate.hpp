#pragma once

#include "hilbzeta/intpoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hilbzeta {

struct InterpolationResult {
    std::optional<IntPoly> poly; // empty when the samples are not polynomial counts
    std::string diagnostic;      // reason when empty
};

// Exact polynomial fit: finds the unique polynomial of degree <= max_degree
// through the first max_degree+1 samples (exact rational arithmetic inside),
// then demands integer coefficients and agreement with every surplus sample.
// Sample points must be pairwise distinct.
InterpolationResult interpolate_exact(const std::vector<std::pair<BigInt, BigInt>>& samples,
                                      int max_degree);

} // namespace hilbzeta
