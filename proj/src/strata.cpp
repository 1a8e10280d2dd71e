#include "hilbzeta/strata.hpp"
#include "hilbzeta/error.hpp"
#include "hilbzeta/intmatrix.hpp"

#include <algorithm>

namespace hilbzeta {

namespace {

std::string admissibility_failure(int genus, const std::vector<int>& values) {
    if (genus < 0) return "genus must be non-negative";
    size_t expect = genus == 0 ? 0 : static_cast<size_t>(2 * genus - 1);
    if (values.size() != expect)
        return "expected " + std::to_string(expect) + " stored values for genus " +
               std::to_string(genus) + ", got " + std::to_string(values.size());
    int prev = 0; // h(-1)
    for (size_t i = 0; i < values.size(); ++i) {
        int step = values[i] - prev;
        if (step < 0 || step > 1)
            return "increment " + std::to_string(step) + " at degree " + std::to_string(i) +
                   " lies outside {0,1}";
        prev = values[i];
    }
    int stable = genus == 0 ? 1 : genus; // h(max(2g-1, 0))
    int step = stable - prev;
    if (step < 0 || step > 1)
        return "increment " + std::to_string(step) + " into the stable range lies outside {0,1}";
    return "";
}

} // namespace

HilbertFn::HilbertFn(int genus, std::vector<int> values) {
    std::string why = admissibility_failure(genus, values);
    if (!why.empty())
        fail(Error::Kind::argument, "inadmissible Hilbert function: " + why);
    genus_ = genus;
    values_ = std::move(values);
}

std::optional<HilbertFn> HilbertFn::try_make(int genus, std::vector<int> values) {
    if (!admissibility_failure(genus, values).empty()) return std::nullopt;
    HilbertFn h;
    h.genus_ = genus;
    h.values_ = std::move(values);
    return h;
}

int HilbertFn::value(int d) const {
    if (d < 0) return 0;
    if (d < static_cast<int>(values_.size())) return values_[static_cast<size_t>(d)];
    return d + 1 - genus_;
}

std::string HilbertFn::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values_[i]);
    }
    return out + ")";
}

std::vector<HilbertFn> enumerate_admissible(int genus) {
    if (genus < 0) fail(Error::Kind::argument, "genus must be non-negative");
    std::vector<HilbertFn> out;
    if (genus == 0) {
        out.push_back(*HilbertFn::try_make(0, {}));
        return out;
    }
    size_t len = static_cast<size_t>(2 * genus - 1);
    std::vector<int> values(len, 0);
    // depth-first with the smaller value first gives lexicographic order
    auto recurse = [&](auto&& self, size_t idx, int prev) -> void {
        if (idx == len) {
            int step = genus - prev;
            if (step == 0 || step == 1) out.push_back(*HilbertFn::try_make(genus, values));
            return;
        }
        for (int step = 0; step <= 1; ++step) {
            values[idx] = prev + step;
            self(self, idx + 1, prev + step);
        }
    };
    recurse(recurse, 0, 0);
    return out;
}

JumpSets jump_sets(const HilbertFn& h) {
    JumpSets sets;
    int g = h.genus();
    for (int d = 0; d <= 2 * g; ++d) {
        int expr = 2 * h.value(d - 1) - h.value(d - 2) - h.value(d);
        if (expr == -1) sets.starts.push_back(d);
        else if (expr == 1) sets.stops.push_back(d);
    }
    return sets;
}

QPoly stratum_poly(const HilbertFn& h) {
    JumpSets sets = jump_sets(h);
    QPoly out(Ring::lefschetz);
    for (int d : sets.starts)
        out += QPoly::q_monomial(Ring::lefschetz, d, IntPoly::monomial(h.value(d) - 1));
    for (int d : sets.stops)
        out -= QPoly::q_monomial(Ring::lefschetz, d, IntPoly::monomial(h.value(d - 1)));
    return out;
}

HilbertFn serre_dual(const HilbertFn& h) {
    int g = h.genus();
    std::vector<int> values;
    values.reserve(g == 0 ? 0 : static_cast<size_t>(2 * g - 1));
    for (int d = 0; d <= 2 * g - 2; ++d) values.push_back(h.value(2 * g - 2 - d) + d + 1 - g);
    auto dual = HilbertFn::try_make(g, std::move(values));
    if (!dual)
        fail(Error::Kind::argument,
             "Serre dual of " + h.to_string() + " is not admissible; input is malformed");
    return *dual;
}

DualityReport check_stratum_duality(const HilbertFn& h) {
    DualityReport report;
    QPoly zh = stratum_poly(h);
    QPoly expected = stratum_poly(serre_dual(h));
    QPoly image(Ring::lefschetz);
    try {
        image = laurent_substitute(zh, h.genus());
    } catch (const Error& e) {
        report.pass = false;
        report.detail = std::string("substitution failed: ") + e.what();
        return report;
    }
    if (image == expected) {
        report.pass = true;
        return report;
    }
    report.pass = false;
    for (int d = 0; d <= std::max(image.degree(), expected.degree()); ++d) {
        if (image.coeff(d) != expected.coeff(d)) {
            report.detail = "mismatch at q^" + std::to_string(d) + ": got " +
                            image.coeff(d).to_string("L") + ", expected " +
                            expected.coeff(d).to_string("L");
            break;
        }
    }
    return report;
}

QPoly assemble(const StrataDecomp& decomp) {
    QPoly out(Ring::lefschetz);
    for (size_t i = 0; i < decomp.entries.size(); ++i) {
        const auto& [h, cls] = decomp.entries[i];
        if (h.genus() != decomp.entries[0].first.genus())
            fail(Error::Kind::argument, "strata decomposition mixes genera");
        for (size_t j = i + 1; j < decomp.entries.size(); ++j)
            if (decomp.entries[j].first == h)
                fail(Error::Kind::argument, "duplicate Hilbert function in strata decomposition");
        QPoly zh = stratum_poly(h);
        std::vector<IntPoly> scaled;
        scaled.reserve(static_cast<size_t>(zh.degree()) + 1);
        for (int d = 0; d <= zh.degree(); ++d) scaled.push_back(zh.coeff(d) * cls);
        out += QPoly(Ring::lefschetz, std::move(scaled));
    }
    return out;
}

StrataSolution solve_strata(const QPoly& z, int genus, int max_coeff_degree) {
    StrataSolution sol;
    if (z.ring() != Ring::lefschetz)
        fail(Error::Kind::ring_mismatch, "strata solving works over the Lefschetz ring");
    if (genus < 0) fail(Error::Kind::argument, "genus must be non-negative");
    sol.basis = enumerate_admissible(genus);
    if (z.degree() > 2 * genus) {
        sol.diagnostic = "no decomposition: q-degree " + std::to_string(z.degree()) +
                         " exceeds 2g = " + std::to_string(2 * genus);
        return sol;
    }
    int lmax = max_coeff_degree >= 0 ? max_coeff_degree : std::max(0, z.max_coeff_degree());
    int coeff_rows = std::max(lmax + genus, z.max_coeff_degree()) + 1;
    int q_rows = 2 * genus + 1;
    size_t unknowns = sol.basis.size() * static_cast<size_t>(lmax + 1);

    IntMat a(q_rows * coeff_rows, static_cast<int>(unknowns));
    std::vector<BigInt> b(static_cast<size_t>(q_rows * coeff_rows));
    auto row_of = [&](int qd, int lk) { return qd * coeff_rows + lk; };
    for (int d = 0; d <= z.degree(); ++d) {
        IntPoly c = z.coeff(d);
        for (int k = 0; k <= c.degree(); ++k) b[static_cast<size_t>(row_of(d, k))] = c.coeff(k);
    }
    for (size_t hi = 0; hi < sol.basis.size(); ++hi) {
        QPoly zh = stratum_poly(sol.basis[hi]);
        for (int j = 0; j <= lmax; ++j) {
            int col = static_cast<int>(hi) * (lmax + 1) + j;
            for (int d = 0; d <= zh.degree(); ++d) {
                IntPoly c = zh.coeff(d);
                for (int k = 0; k <= c.degree(); ++k) {
                    if (c.coeff(k).is_zero()) continue;
                    a.at(row_of(d, k + j), col) += c.coeff(k);
                }
            }
        }
    }

    IntSolveResult linear = solve_integer_system(a, b);
    sol.consistent = linear.consistent;
    sol.integral = linear.integral;
    if (!linear.consistent) {
        sol.diagnostic = "no decomposition: the strata system is inconsistent for genus " +
                         std::to_string(genus);
        return sol;
    }
    if (!linear.integral) {
        sol.diagnostic = "no integer decomposition: the strata system is solvable over Q only";
    }

    auto unpack = [&](const std::vector<BigInt>& flat) {
        std::vector<IntPoly> per_h;
        per_h.reserve(sol.basis.size());
        for (size_t hi = 0; hi < sol.basis.size(); ++hi) {
            std::vector<BigInt> cs(flat.begin() + static_cast<long>(hi) * (lmax + 1),
                                   flat.begin() + static_cast<long>(hi + 1) * (lmax + 1));
            per_h.push_back(IntPoly::from_coeffs(std::move(cs)));
        }
        return per_h;
    };

    if (linear.integral) sol.particular = unpack(linear.particular);
    for (int k = 0; k < linear.kernel.cols(); ++k) {
        std::vector<BigInt> flat(unknowns);
        for (size_t i = 0; i < unknowns; ++i) flat[i] = linear.kernel.at(static_cast<int>(i), k);
        sol.kernel.push_back(unpack(flat));
    }
    return sol;
}

} // namespace hilbzeta
