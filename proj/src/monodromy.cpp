#include "hilbzeta/monodromy.hpp"
#include "hilbzeta/error.hpp"

#include <algorithm>
#include <map>

namespace hilbzeta {

NodalMonodromy::NodalMonodromy(int delta, int r) : delta_(delta), r_(r) {
    if (delta < 0 || r < 0) fail(Error::Kind::argument, "delta and r must be non-negative");
}

// Basis layout: for node k the vanishing cycle sits at index 2k and its
// symplectic partner at 2k+1; indices 2*delta .. 2*delta+2r-1 are the
// monodromy-trivial directions from the normalization.
IntMat NodalMonodromy::log_generator(int k) const {
    if (k < 0 || k >= delta_) fail(Error::Kind::argument, "monodromy generator index out of range");
    IntMat n(h1_dim(), h1_dim());
    n.at(2 * k, 2 * k + 1) = BigInt(1); // partner |-> vanishing cycle
    return n;
}

std::vector<ExtSummand> hilbert_summands(int i, int d) {
    if (d < 0 || i < 0 || i > 2 * d)
        fail(Error::Kind::argument, "cohomological degree must lie in [0, 2d]");
    int extra_twist = 0;
    if (i > d) {
        extra_twist = i - d;
        i = 2 * d - i;
    }
    std::vector<ExtSummand> out;
    for (int k = 0; 2 * k <= i; ++k) out.push_back({i - 2 * k, k + extra_twist});
    return out;
}

std::vector<std::vector<int>> wedge_basis(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<size_t>(k));
    auto recurse = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur[static_cast<size_t>(depth)] = v;
            self(self, v + 1, depth + 1);
        }
    };
    recurse(recurse, 0, 0);
    return out;
}

IntMat wedge_derivation(const IntMat& nilpotent, int k) {
    int n = nilpotent.rows();
    if (nilpotent.cols() != n) fail(Error::Kind::argument, "derivation needs a square matrix");
    std::vector<std::vector<int>> basis = wedge_basis(n, k);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

    IntMat out(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (size_t col = 0; col < basis.size(); ++col) {
        const std::vector<int>& tuple = basis[col];
        for (size_t pos = 0; pos < tuple.size(); ++pos) {
            int src = tuple[static_cast<size_t>(pos)];
            for (int dst = 0; dst < n; ++dst) {
                const BigInt& entry = nilpotent.at(dst, src);
                if (entry.is_zero()) continue;
                // replace tuple[pos] by dst, resort with sign, drop repeats
                if (std::find(tuple.begin(), tuple.end(), dst) != tuple.end()) continue;
                std::vector<int> image = tuple;
                image[pos] = dst;
                int sign = 1;
                for (size_t a = 0; a + 1 < image.size(); ++a)
                    for (size_t b = 0; b + 1 < image.size() - a; ++b)
                        if (image[b] > image[b + 1]) {
                            std::swap(image[b], image[b + 1]);
                            sign = -sign;
                        }
                out.at(index.at(image), static_cast<int>(col)) += sign > 0 ? entry : -entry;
            }
        }
    }
    return out;
}

std::vector<Subspace> weight_filtration(const IntMat& nilpotent) {
    int n = nilpotent.rows();
    if (nilpotent.cols() != n) fail(Error::Kind::argument, "weight filtration needs a square matrix");
    // nilpotency order: smallest L with N^(L+1) = 0
    int order = 0;
    {
        IntMat power = nilpotent;
        while (!power.is_zero()) {
            ++order;
            power = power * nilpotent;
            if (order > n) fail(Error::Kind::argument, "matrix is not nilpotent");
        }
    }
    std::vector<IntMat> powers; // N^0 .. N^(order+1)
    powers.push_back(IntMat::identity(n));
    for (int p = 1; p <= order + 1; ++p) powers.push_back(powers.back() * nilpotent);

    std::vector<Subspace> kernels, images;
    for (int p = 0; p <= order + 1; ++p) {
        kernels.push_back(Subspace::span_of_columns(powers[static_cast<size_t>(p)].kernel()));
        images.push_back(Subspace::span_of_columns(powers[static_cast<size_t>(p)]));
    }

    // W_k = sum_i ker(N^(k+i+1)) /\ im(N^i), indices clamped to [0, order+1]
    std::vector<Subspace> filtration;
    for (int k = -order - 1; k <= order; ++k) {
        Subspace acc(n);
        for (int i = 0; i <= order; ++i) {
            int kp = k + i + 1;
            if (kp <= 0) continue; // ker(N^0) = 0
            kp = std::min(kp, order + 1);
            Subspace piece = Subspace::intersect(kernels[static_cast<size_t>(kp)], images[static_cast<size_t>(i)]);
            acc = Subspace::sum(acc, piece);
        }
        filtration.push_back(acc);
    }
    return filtration; // index j corresponds to weight j - order - 1
}

namespace {

struct SummandWeights {
    int inv_dim = 0;
    // graded dims of the induced filtration on the invariants, centered at
    // the wedge degree: weights[w] = dim gr_w
    std::map<int, int> graded;
};

SummandWeights analyze_wedge(const NodalMonodromy& mono, int wedge) {
    SummandWeights result;
    int n = mono.h1_dim();
    if (wedge > n) return result; // zero space
    std::vector<IntMat> logs;
    for (int k = 0; k < mono.delta(); ++k) logs.push_back(wedge_derivation(mono.log_generator(k), wedge));
    int m = static_cast<int>(wedge_basis(n, wedge).size());

    Subspace invariants = Subspace::full(m);
    if (!logs.empty()) {
        IntMat stacked = logs[0];
        for (size_t k = 1; k < logs.size(); ++k) stacked = IntMat::vstack(stacked, logs[k]);
        invariants = Subspace::span_of_columns(stacked.kernel());
    }
    result.inv_dim = invariants.dim();
    if (result.inv_dim == 0) return result;

    IntMat total(m, m);
    for (const IntMat& l : logs) total = total + l;
    std::vector<Subspace> filtration = weight_filtration(total);
    int order = (static_cast<int>(filtration.size()) - 1) / 2; // size = 2*order + 2

    int prev = 0;
    for (size_t j = 0; j < filtration.size(); ++j) {
        int centered = static_cast<int>(j) - order - 1; // weight relative to 0
        Subspace cut = Subspace::intersect(filtration[j], invariants);
        int dim = cut.dim();
        if (dim > prev) result.graded[wedge + centered] = dim - prev;
        prev = dim;
    }
    return result;
}

} // namespace

int nodal_invariants(int delta, int r, int i, int d) {
    NodalMonodromy mono(delta, r);
    int total = 0;
    for (const ExtSummand& s : hilbert_summands(i, d)) total += analyze_wedge(mono, s.wedge).inv_dim;
    return total;
}

IntPoly nodal_weight_polynomial(int delta, int r, int d) {
    NodalMonodromy mono(delta, r);
    // cache per wedge degree; the same wedge shows up across many (i, k)
    std::map<int, SummandWeights> cache;
    IntPoly out;
    for (int i = 0; i <= 2 * d; ++i) {
        for (const ExtSummand& s : hilbert_summands(i, d)) {
            auto it = cache.find(s.wedge);
            if (it == cache.end()) it = cache.emplace(s.wedge, analyze_wedge(mono, s.wedge)).first;
            for (const auto& [w, dim] : it->second.graded) {
                int weight = w + 2 * s.twist;
                BigInt term(dim);
                if ((i + weight) % 2 != 0) term = -term;
                out += IntPoly::monomial(weight, term);
            }
        }
    }
    return out;
}

} // namespace hilbzeta
