#pragma once

#include "hilbzeta/qseries.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hilbzeta {

// Hilbert function of a degree-0 rank-1 torsion-free sheaf on an integral
// curve of arithmetic genus g, encoded by its values on [0, 2g-2] (empty for
// g = 0).  The tails are forced: h(d) = 0 for d < 0 and h(d) = d+1-g for
// d > 2g-2.  Admissible means: consecutive increments lie in {0,1},
// including the steps into both tails.
class HilbertFn {
public:
    HilbertFn(int genus, std::vector<int> values); // throws if inadmissible
    static std::optional<HilbertFn> try_make(int genus, std::vector<int> values);

    int genus() const { return genus_; }
    const std::vector<int>& stored_values() const { return values_; }
    int value(int d) const; // reconstructs forced tails

    friend bool operator==(const HilbertFn& a, const HilbertFn& b) {
        return a.genus_ == b.genus_ && a.values_ == b.values_;
    }
    friend bool operator!=(const HilbertFn& a, const HilbertFn& b) { return !(a == b); }
    friend bool operator<(const HilbertFn& a, const HilbertFn& b) { return a.values_ < b.values_; }

    std::string to_string() const; // "(v0,v1,...)"

private:
    HilbertFn() = default;
    int genus_ = 0;
    std::vector<int> values_;
};

// All admissible Hilbert functions for genus g, in lexicographic order of
// their value sequences.
std::vector<HilbertFn> enumerate_admissible(int genus);

// Degrees where the second difference 2h(d-1) - h(d-2) - h(d) equals -1
// (a growth run starts) resp. +1 (a growth run stops).  Guaranteed ranges:
// starts in [0, 2g], stops in [1, 2g-1].
struct JumpSets {
    std::vector<int> starts;
    std::vector<int> stops;
};
JumpSets jump_sets(const HilbertFn& h);

// The stratum cell polynomial
//   Z_h(q) = sum_{d in starts} q^d L^(h(d)-1) - sum_{d in stops} q^d L^(h(d-1)),
// a Lefschetz-ring polynomial of q-degree at most 2g.
QPoly stratum_poly(const HilbertFn& h);

// Serre-dual Hilbert function h'(d) = h(2g-2-d) + d + 1 - g.  An involution
// on admissible functions; throws if the input produces an inadmissible
// result (malformed input).
HilbertFn serre_dual(const HilbertFn& h);

struct DualityReport {
    bool pass = false;
    std::string detail;
};
// Checks q^(2g) L^g Z_h(1/(qL)) == Z_{h'}(q) exactly.
DualityReport check_stratum_duality(const HilbertFn& h);

// A decomposition of a zeta numerator into strata: entries pair a Hilbert
// function with the class of its stratum in Z[L].  All entries must share a
// genus and be pairwise distinct.
struct StrataDecomp {
    std::vector<std::pair<HilbertFn, IntPoly>> entries;
};
QPoly assemble(const StrataDecomp& decomp);

// Solution space of sum_h x_h * Z_h = Z over Z[L] coefficient vectors with
// deg_L x_h <= max_coeff_degree (defaults to the maximal L-degree in Z).
struct StrataSolution {
    bool consistent = false;   // solvable at all
    bool integral = false;     // solvable with integer (Z[L]) coefficients
    std::string diagnostic;
    std::vector<HilbertFn> basis;                 // admissible h, lex order
    std::vector<IntPoly> particular;              // parallel to basis, when integral
    std::vector<std::vector<IntPoly>> kernel;     // homogeneous solution basis
    bool unique() const { return consistent && integral && kernel.empty(); }
};
StrataSolution solve_strata(const QPoly& z, int genus, int max_coeff_degree = -1);

} // namespace hilbzeta
