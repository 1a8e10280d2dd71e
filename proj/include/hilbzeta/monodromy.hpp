#pragma once

#include "hilbzeta/intmatrix.hpp"
#include "hilbzeta/intpoly.hpp"

#include <vector>

namespace hilbzeta {

// Picard-Lefschetz monodromy data for a family degenerating to a rational
// curve with `delta` disjoint nodes and normalization contributions of rank
// 2r.  H^1 of a nearby smooth fibre is 2r + 2delta dimensional; each node
// contributes one commuting unipotent generator with a single Jordan block
// of length 2, the 2r remaining directions are monodromy-trivial.
class NodalMonodromy {
public:
    NodalMonodromy(int delta, int r);

    int delta() const { return delta_; }
    int r() const { return r_; }
    int h1_dim() const { return 2 * r_ + 2 * delta_; }

    // log T_k on H^1 (square-zero nilpotent), k = 0..delta-1
    IntMat log_generator(int k) const;

private:
    int delta_;
    int r_;
};

// The linear-algebra operation turning H^1 into the degree-i piece of a
// Hilbert-scheme fibre: a direct sum of exterior powers with Tate twists,
// with degrees above d filled in by duality.
struct ExtSummand {
    int wedge; // exterior power of H^1
    int twist; // Tate twists, contributing t^(2*twist) to weights
};
std::vector<ExtSummand> hilbert_summands(int i, int d);

// Exterior power machinery: ordered basis of sorted index tuples, and the
// induced matrix of a square-zero nilpotent as a derivation.
std::vector<std::vector<int>> wedge_basis(int n, int k);
IntMat wedge_derivation(const IntMat& nilpotent, int k);

// Monodromy weight filtration of a nilpotent operator, centered at 0:
// the unique filtration W with N W_k <= W_{k-2} and N^k an isomorphism
// gr_k -> gr_{-k}.  Returns W_{-L-1} <= ... <= W_L as subspaces where
// N^(L+1) = 0.
std::vector<Subspace> weight_filtration(const IntMat& nilpotent);

// dim of the simultaneous fixed space of all monodromy generators acting on
// the degree-i summand for the d-th Hilbert scheme.
int nodal_invariants(int delta, int r, int i, int d);

// Weight polynomial of the monodromy-invariant summand of H^*(C^[d]),
// computed from the explicit limit weight filtration.  Must equal the q^d
// coefficient of the closed-formula weight series.
IntPoly nodal_weight_polynomial(int delta, int r, int d);

} // namespace hilbzeta
