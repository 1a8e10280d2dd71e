#include "hilbzeta/oracle.hpp"
#include "hilbzeta/error.hpp"
#include "hilbzeta/interpolate.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace hilbzeta {

// ---------------------------------------------------------------------------
// germ equation parsing

namespace {

struct Parser {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void die(const std::string& why) {
        fail(Error::Kind::parse, "germ equation parse error at position " + std::to_string(pos) + ": " + why);
    }

    BivarPoly parse_expr() {
        BivarPoly acc;
        bool negate = eat('-');
        if (!negate) eat('+');
        acc = parse_term();
        if (negate) acc = BivarPoly() - acc;
        while (true) {
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else break;
        }
        return acc;
    }

    BivarPoly parse_term() {
        BivarPoly acc = parse_power();
        while (eat('*')) acc = acc * parse_power();
        return acc;
    }

    BivarPoly parse_power() {
        BivarPoly base = parse_atom();
        if (eat('^')) {
            skip_ws();
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                die("expected a non-negative integer exponent after '^'");
            unsigned exp = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                exp = exp * 10 + static_cast<unsigned>(text[pos] - '0');
                if (exp > 64) die("exponent too large");
                ++pos;
            }
            return base.pow(exp);
        }
        return base;
    }

    BivarPoly parse_atom() {
        skip_ws();
        if (pos >= text.size()) die("unexpected end of input");
        char c = text[pos];
        BivarPoly out;
        if (c == '(') {
            ++pos;
            out = parse_expr();
            if (!eat(')')) die("expected ')'");
            return out;
        }
        if (c == 'x') {
            ++pos;
            out.add_term(1, 0, BigInt(1));
            return out;
        }
        if (c == 'y') {
            ++pos;
            out.add_term(0, 1, BigInt(1));
            return out;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            out.add_term(0, 0, BigInt::from_string(text.substr(start, pos - start)));
            return out;
        }
        die(std::string("unexpected character '") + c + "'");
    }
};

uint32_t mod_reduce(const BigInt& value, uint32_t p) {
    BigInt r = value % BigInt(static_cast<long long>(p));
    long long v = r.to_int64();
    if (v < 0) v += p;
    return static_cast<uint32_t>(v);
}

uint32_t mod_inverse(uint32_t a, uint32_t p) {
    // extended Euclid; p prime, a != 0 mod p
    int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

} // namespace

BivarPoly BivarPoly::parse(std::string_view text) {
    Parser parser{text};
    BivarPoly out = parser.parse_expr();
    parser.skip_ws();
    if (parser.pos != text.size()) parser.die("trailing input");
    return out;
}

void BivarPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
}

BigInt BivarPoly::constant_term() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? BigInt() : it->second;
}

int BivarPoly::order() const {
    int best = -1;
    for (const auto& [deg, coeff] : terms_) {
        int total = deg.first + deg.second;
        if (best < 0 || total < best) best = total;
    }
    return best;
}

int BivarPoly::order_mod(uint32_t p) const {
    int best = -1;
    for (const auto& [deg, coeff] : terms_) {
        if (mod_reduce(coeff, p) == 0) continue;
        int total = deg.first + deg.second;
        if (best < 0 || total < best) best = total;
    }
    return best;
}

void BivarPoly::add_term(int dx, int dy, BigInt coeff) {
    if (dx < 0 || dy < 0) fail(Error::Kind::argument, "negative exponent in bivariate term");
    terms_[{dx, dy}] += coeff;
    if (terms_[{dx, dy}].is_zero()) terms_.erase({dx, dy});
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out = a;
    for (const auto& [deg, coeff] : b.terms_) out.terms_[deg] += coeff;
    out.prune();
    return out;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out = a;
    for (const auto& [deg, coeff] : b.terms_) out.terms_[deg] -= coeff;
    out.prune();
    return out;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out;
    for (const auto& [da, ca] : a.terms_)
        for (const auto& [db, cb] : b.terms_)
            out.terms_[{da.first + db.first, da.second + db.second}] += ca * cb;
    out.prune();
    return out;
}

BivarPoly BivarPoly::pow(unsigned exponent) const {
    BivarPoly result;
    result.add_term(0, 0, BigInt(1));
    BivarPoly base = *this;
    while (exponent) {
        if (exponent & 1) result = result * base;
        base = base * base;
        exponent >>= 1;
    }
    return result;
}

std::string BivarPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [deg, coeff] : terms_) {
        std::string mono;
        BigInt a = coeff.abs();
        if (!a.is_one() || (deg.first == 0 && deg.second == 0)) mono += a.to_string();
        if (deg.first > 0) {
            if (!mono.empty()) mono += "*";
            mono += "x";
            if (deg.first > 1) mono += "^" + std::to_string(deg.first);
        }
        if (deg.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += "y";
            if (deg.second > 1) mono += "^" + std::to_string(deg.second);
        }
        if (out.empty()) {
            if (coeff.is_negative()) out += "-";
        } else {
            out += coeff.is_negative() ? " - " : " + ";
        }
        out += mono;
    }
    return out;
}

GermEq make_germ_eq(std::string label, std::string_view equation, int branches, int cogenus) {
    if (branches < 1) fail(Error::Kind::argument, "branch count must be positive");
    if (cogenus < 0) fail(Error::Kind::argument, "cogenus must be non-negative");
    GermEq germ;
    germ.label = std::move(label);
    germ.f = BivarPoly::parse(equation);
    germ.branches = branches;
    germ.cogenus = cogenus;
    if (!germ.f.constant_term().is_zero())
        fail(Error::Kind::argument, "germ equation must vanish at the origin: f(0,0) != 0");
    if (germ.f.is_zero()) fail(Error::Kind::argument, "germ equation must be nonzero");
    return germ;
}

// ---------------------------------------------------------------------------
// finite quotient construction

namespace {

// monomials of total degree < bound in a fixed order: by degree, then by
// y-exponent ascending
std::vector<std::pair<int, int>> monomials_below(int bound) {
    std::vector<std::pair<int, int>> out;
    for (int total = 0; total < bound; ++total)
        for (int dy = 0; dy <= total; ++dy) out.push_back({total - dy, dy});
    return out;
}

} // namespace

FiniteQuotient FiniteQuotient::build(const BivarPoly& f, uint32_t p, int truncation) {
    if (!is_prime(p)) fail(Error::Kind::argument, std::to_string(p) + " is not prime");
    if (truncation < 1) fail(Error::Kind::argument, "quotient truncation must be at least 1");
    int ord = f.order();
    int ord_p = f.order_mod(p);
    if (ord_p < 0)
        fail(Error::Kind::argument,
             "degenerate reduction: the germ equation vanishes identically mod " + std::to_string(p));
    if (ord_p != ord)
        fail(Error::Kind::argument,
             "degenerate reduction: " + std::to_string(p) + " divides the lowest-order part of the germ equation");

    std::vector<std::pair<int, int>> monos = monomials_below(truncation);
    std::map<std::pair<int, int>, int> index;
    for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = static_cast<int>(i);
    int full_dim = static_cast<int>(monos.size());

    // relation rows: truncations of f * x^i y^j
    std::vector<std::vector<uint32_t>> rows;
    for (const auto& [mi, mj] : monos) {
        std::vector<uint32_t> row(static_cast<size_t>(full_dim), 0);
        bool nonzero = false;
        for (const auto& [deg, coeff] : f.terms()) {
            int dx = deg.first + mi, dy = deg.second + mj;
            if (dx + dy >= truncation) continue;
            uint32_t c = mod_reduce(coeff, p);
            if (c == 0) continue;
            row[static_cast<size_t>(index.at({dx, dy}))] = (row[static_cast<size_t>(index.at({dx, dy}))] + c) % p;
            nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
    }

    // row-reduce the relation space; pivot columns get eliminated from the basis
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (int col = 0; col < full_dim && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][static_cast<size_t>(col)] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        uint32_t inv = mod_inverse(rows[rank][static_cast<size_t>(col)], p);
        for (int j = col; j < full_dim; ++j)
            rows[rank][static_cast<size_t>(j)] = static_cast<uint32_t>(uint64_t(rows[rank][static_cast<size_t>(j)]) * inv % p);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            uint32_t factor = rows[r][static_cast<size_t>(col)];
            if (factor == 0) continue;
            for (int j = col; j < full_dim; ++j) {
                uint64_t sub = uint64_t(factor) * rows[rank][static_cast<size_t>(j)] % p;
                rows[r][static_cast<size_t>(j)] = static_cast<uint32_t>((rows[r][static_cast<size_t>(j)] + p - sub) % p);
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    rows.resize(rank);

    FiniteQuotient quotient;
    quotient.p_ = p;
    quotient.truncation_ = truncation;
    std::vector<int> basis_col;
    {
        std::unordered_set<int> pivots(pivot_col.begin(), pivot_col.end());
        for (int col = 0; col < full_dim; ++col)
            if (!pivots.count(col)) {
                basis_col.push_back(col);
                quotient.basis_.push_back(monos[static_cast<size_t>(col)]);
            }
    }
    int dim = static_cast<int>(basis_col.size());

    // reduce a monomial (given by full-space column) to quotient coordinates
    auto reduce_monomial = [&](int col) {
        std::vector<uint32_t> vec(static_cast<size_t>(dim), 0);
        // subtract pivot rows: monomial col reduces to -sum over its pivot row
        for (size_t r = 0; r < rows.size(); ++r) {
            if (pivot_col[r] != col) continue;
            for (int b = 0; b < dim; ++b) {
                uint32_t entry = rows[r][static_cast<size_t>(basis_col[static_cast<size_t>(b)])];
                if (entry) vec[static_cast<size_t>(b)] = (p - entry) % p;
            }
            return vec;
        }
        // not a pivot: either a basis monomial or beyond the truncation
        auto it = std::lower_bound(basis_col.begin(), basis_col.end(), col);
        if (it != basis_col.end() && *it == col)
            vec[static_cast<size_t>(it - basis_col.begin())] = 1;
        return vec;
    };

    auto build_mult = [&](int dx, int dy) {
        std::vector<std::vector<uint32_t>> cols;
        cols.reserve(static_cast<size_t>(dim));
        for (const auto& [mi, mj] : quotient.basis_) {
            int ni = mi + dx, nj = mj + dy;
            if (ni + nj >= truncation) {
                cols.emplace_back(static_cast<size_t>(dim), 0);
            } else {
                cols.push_back(reduce_monomial(index.at({ni, nj})));
            }
        }
        return cols;
    };
    quotient.mult_x_ = build_mult(1, 0);
    quotient.mult_y_ = build_mult(0, 1);
    return quotient;
}

void FiniteQuotient::permute_basis(const std::vector<int>& perm) {
    int dim = this->dim();
    if (static_cast<int>(perm.size()) != dim) fail(Error::Kind::argument, "permutation size mismatch");
    std::vector<std::pair<int, int>> new_basis(static_cast<size_t>(dim));
    std::vector<std::vector<uint32_t>> new_x(static_cast<size_t>(dim)), new_y(static_cast<size_t>(dim));
    for (int j = 0; j < dim; ++j) {
        new_basis[static_cast<size_t>(perm[static_cast<size_t>(j)])] = basis_[static_cast<size_t>(j)];
        std::vector<uint32_t> cx(static_cast<size_t>(dim)), cy(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i) {
            cx[static_cast<size_t>(perm[static_cast<size_t>(i)])] = mult_x_[static_cast<size_t>(j)][static_cast<size_t>(i)];
            cy[static_cast<size_t>(perm[static_cast<size_t>(i)])] = mult_y_[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
        new_x[static_cast<size_t>(perm[static_cast<size_t>(j)])] = std::move(cx);
        new_y[static_cast<size_t>(perm[static_cast<size_t>(j)])] = std::move(cy);
    }
    basis_ = std::move(new_basis);
    mult_x_ = std::move(new_x);
    mult_y_ = std::move(new_y);
}

// ---------------------------------------------------------------------------
// ideal counting: socle-chain walk
//
// Every ideal I of colength k+1 sits inside an ideal J of colength k with
// dim J/I = 1 (add a socle element of A/I to I), and every codimension-1
// subideal of J contains mJ (Nakayama).  So the ideals of colength k+1 are
// exactly the pullbacks of hyperplanes of J/mJ over ideals J of colength k.

namespace {

struct IdealBasis {
    // reduced row echelon rows over F_p, each of length dim
    std::vector<std::vector<uint32_t>> rows;

    bool operator==(const IdealBasis& other) const { return rows == other.rows; }
};

struct IdealHash {
    size_t operator()(const IdealBasis& b) const {
        size_t h = 1469598103934665603ull;
        for (const auto& row : b.rows)
            for (uint32_t v : row) h = (h ^ v) * 1099511628211ull;
        return h;
    }
};

// reduced row echelon form over F_p; returns rank
void rref(std::vector<std::vector<uint32_t>>& rows, uint32_t p) {
    if (rows.empty()) return;
    size_t cols = rows[0].size(), rank = 0;
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        uint32_t inv = mod_inverse(rows[rank][col], p);
        for (size_t j = col; j < cols; ++j)
            rows[rank][j] = static_cast<uint32_t>(uint64_t(rows[rank][j]) * inv % p);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            uint32_t factor = rows[r][col];
            for (size_t j = col; j < cols; ++j) {
                uint64_t sub = uint64_t(factor) * rows[rank][j] % p;
                rows[r][j] = static_cast<uint32_t>((rows[r][j] + p - sub) % p);
            }
        }
        ++rank;
    }
    rows.resize(rank);
}

std::vector<uint32_t> apply_mult(const std::vector<std::vector<uint32_t>>& mult,
                                 const std::vector<uint32_t>& vec, uint32_t p) {
    size_t dim = vec.size();
    std::vector<uint64_t> acc(dim, 0);
    for (size_t j = 0; j < dim; ++j) {
        if (vec[j] == 0) continue;
        const std::vector<uint32_t>& col = mult[j];
        for (size_t i = 0; i < dim; ++i) acc[i] += uint64_t(vec[j]) * col[i];
    }
    std::vector<uint32_t> out(dim);
    for (size_t i = 0; i < dim; ++i) out[i] = static_cast<uint32_t>(acc[i] % p);
    return out;
}

// reduce vec modulo the rref rows; returns the normal form
std::vector<uint32_t> normal_form(const std::vector<std::vector<uint32_t>>& rref_rows,
                                  std::vector<uint32_t> vec, uint32_t p) {
    for (const auto& row : rref_rows) {
        size_t lead = 0;
        while (lead < row.size() && row[lead] == 0) ++lead;
        if (lead == row.size()) continue;
        uint32_t factor = vec[lead];
        if (factor == 0) continue;
        for (size_t j = lead; j < row.size(); ++j) {
            uint64_t sub = uint64_t(factor) * row[j] % p;
            vec[j] = static_cast<uint32_t>((vec[j] + p - sub) % p);
        }
    }
    return vec;
}

} // namespace

std::vector<long long> FiniteQuotient::count_ideals_by_colength(int max_colength) const {
    if (max_colength < 0) fail(Error::Kind::argument, "negative colength");
    if (max_colength > truncation_)
        fail(Error::Kind::argument,
             "colength " + std::to_string(max_colength) + " exceeds the quotient truncation " +
                 std::to_string(truncation_) + "; rebuild with a deeper truncation");
    uint32_t p = p_;
    size_t dim = static_cast<size_t>(this->dim());

    std::vector<long long> counts;
    counts.reserve(static_cast<size_t>(max_colength) + 1);

    std::unordered_set<IdealBasis, IdealHash> level;
    {
        IdealBasis whole;
        whole.rows.assign(dim, std::vector<uint32_t>(dim, 0));
        for (size_t i = 0; i < dim; ++i) whole.rows[i][i] = 1;
        level.insert(std::move(whole));
    }
    counts.push_back(1); // colength 0: the unit ideal

    for (int k = 1; k <= max_colength; ++k) {
        std::unordered_set<IdealBasis, IdealHash> next;
        for (const IdealBasis& ideal : level) {
            // m*J: images of the basis under both multiplications
            std::vector<std::vector<uint32_t>> mj;
            mj.reserve(2 * ideal.rows.size());
            for (const auto& row : ideal.rows) {
                mj.push_back(apply_mult(mult_x_, row, p));
                mj.push_back(apply_mult(mult_y_, row, p));
            }
            rref(mj, p);
            size_t codim = ideal.rows.size() - mj.size(); // mu = dim J/mJ

            // complement representatives of J/mJ
            std::vector<std::vector<uint32_t>> complement;
            {
                std::vector<std::vector<uint32_t>> probe = mj;
                for (const auto& row : ideal.rows) {
                    std::vector<uint32_t> reduced = normal_form(probe, row, p);
                    bool zero = true;
                    for (uint32_t v : reduced) if (v) { zero = false; break; }
                    if (zero) continue;
                    complement.push_back(row);
                    probe.push_back(std::move(reduced));
                    rref(probe, p);
                    if (complement.size() == codim) break;
                }
            }

            // hyperplanes of J/mJ: kernels of normalized nonzero functionals
            size_t mu = complement.size();
            std::vector<uint32_t> lambda(mu, 0);
            auto emit = [&](size_t pivot) {
                // kernel basis of the functional with lambda[pivot] = 1
                IdealBasis candidate;
                candidate.rows = mj;
                for (size_t j = 0; j < mu; ++j) {
                    if (j == pivot) continue;
                    // e_j - lambda_j * e_pivot
                    std::vector<uint32_t> vec(dim, 0);
                    for (size_t c = 0; c < dim; ++c) {
                        uint64_t v = complement[j][c];
                        v += uint64_t(lambda[j] ? p - lambda[j] : 0) * complement[pivot][c] % p;
                        vec[c] = static_cast<uint32_t>(v % p);
                    }
                    candidate.rows.push_back(std::move(vec));
                }
                rref(candidate.rows, p);
                next.insert(std::move(candidate));
            };
            // enumerate functionals with first nonzero coordinate normalized to 1
            for (size_t pivot = 0; pivot < mu; ++pivot) {
                // lambda[j] = 0 for j < pivot, lambda[pivot] = 1, free beyond
                std::vector<uint32_t> free(mu > pivot + 1 ? mu - pivot - 1 : 0, 0);
                while (true) {
                    for (size_t j = 0; j < mu; ++j) lambda[j] = 0;
                    lambda[pivot] = 1;
                    for (size_t j = 0; j < free.size(); ++j) lambda[pivot + 1 + j] = free[j];
                    emit(pivot);
                    size_t idx = 0;
                    while (idx < free.size()) {
                        if (++free[idx] < p) break;
                        free[idx] = 0;
                        ++idx;
                    }
                    if (idx == free.size()) break;
                }
            }
        }
        counts.push_back(static_cast<long long>(next.size()));
        level = std::move(next);
    }
    return counts;
}

long long count_ideals(const FiniteQuotient& quotient, int colength) {
    return quotient.count_ideals_by_colength(colength).back();
}

// ---------------------------------------------------------------------------
// fitting

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

OracleRun oracle_fit(const GermEq& germ, int n_max, const std::vector<uint32_t>& primes) {
    if (n_max < 0) fail(Error::Kind::argument, "n_max must be non-negative");
    // the degree-(n-1) fit at n = n_max needs n_max samples; extra primes act
    // as surplus checks where available
    size_t needed = static_cast<size_t>(std::max(n_max, 1));
    if (primes.size() < needed)
        fail(Error::Kind::argument, "need at least " + std::to_string(needed) +
                                        " primes for colengths up to " + std::to_string(n_max));
    for (size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i]))
            fail(Error::Kind::argument, std::to_string(primes[i]) + " is not prime");
        for (size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j]) fail(Error::Kind::argument, "duplicate prime in sample set");
    }

    OracleRun run;
    run.germ = germ;
    run.primes = primes;

    std::vector<std::vector<long long>> counts; // per prime, per colength
    int truncation = std::max(n_max, 1);
    for (uint32_t p : primes) {
        FiniteQuotient quotient = FiniteQuotient::build(germ.f, p, truncation);
        counts.push_back(quotient.count_ideals_by_colength(n_max));
    }

    for (int n = 0; n <= n_max; ++n) {
        OracleFit fit;
        fit.n = n;
        std::vector<std::pair<BigInt, BigInt>> samples;
        for (size_t pi = 0; pi < primes.size(); ++pi) {
            fit.samples.push_back({primes[pi], counts[pi][static_cast<size_t>(n)]});
            samples.push_back({BigInt(static_cast<long long>(primes[pi])),
                               BigInt(counts[pi][static_cast<size_t>(n)])});
        }
        int degree = std::max(0, n - 1);
        InterpolationResult ir = interpolate_exact(samples, degree);
        fit.surplus_checked = samples.size() > static_cast<size_t>(degree) + 1;
        if (ir.poly) {
            fit.cls = std::move(*ir.poly);
        } else {
            fit.diagnostic = ir.diagnostic +
                             "; a bad small prime can distort the germ, try excluding the suspect prime";
            run.all_fitted = false;
        }
        run.fits.push_back(std::move(fit));
    }
    return run;
}

QSeries OracleRun::assembled_series() const {
    int n_max = static_cast<int>(fits.size()) - 1;
    QSeries punctual(Ring::lefschetz, n_max);
    for (int n = 0; n <= n_max; ++n) {
        if (!fits[static_cast<size_t>(n)].cls)
            fail(Error::Kind::not_polynomial,
                 "cannot assemble: colength " + std::to_string(n) + " has no fitted class (" +
                     fits[static_cast<size_t>(n)].diagnostic + ")");
        punctual.set_coeff(n, *fits[static_cast<size_t>(n)].cls);
    }
    QPoly one_minus_q(Ring::lefschetz, {IntPoly(1), IntPoly(-1)});
    return punctual * one_minus_q.pow(static_cast<unsigned>(germ.branches));
}

std::optional<QPoly> OracleRun::completed_factor() const {
    int n_max = static_cast<int>(fits.size()) - 1;
    if (n_max < 2 * germ.cogenus) return std::nullopt;
    QSeries assembled = assembled_series();
    std::vector<IntPoly> coeffs;
    coeffs.reserve(static_cast<size_t>(2 * germ.cogenus) + 1);
    for (int d = 0; d <= 2 * germ.cogenus; ++d) coeffs.push_back(assembled.coeff(d));
    // beyond degree 2*delta the assembled series must vanish
    for (int d = 2 * germ.cogenus + 1; d <= n_max; ++d)
        if (!assembled.coeff(d).is_zero())
            fail(Error::Kind::degree,
                 "assembled local factor is not a polynomial of degree 2*cogenus: q^" +
                     std::to_string(d) + " coefficient is " + assembled.coeff(d).to_string("L") +
                     " (declared cogenus " + std::to_string(germ.cogenus) + " is inconsistent)");
    return QPoly(Ring::lefschetz, std::move(coeffs));
}

} // namespace hilbzeta
