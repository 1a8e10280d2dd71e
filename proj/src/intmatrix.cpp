#include "hilbzeta/intmatrix.hpp"
#include "hilbzeta/error.hpp"
#include "hilbzeta/rational.hpp"

namespace hilbzeta {

IntMat::IntMat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) fail(Error::Kind::argument, "negative matrix dimension");
    data_.assign(static_cast<size_t>(rows) * cols, BigInt());
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = BigInt(1);
    return m;
}

bool IntMat::is_zero() const {
    for (const BigInt& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
    if (a.cols_ != b.rows_) fail(Error::Kind::argument, "matrix product shape mismatch");
    IntMat out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return out;
}

IntMat operator+(const IntMat& a, const IntMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(Error::Kind::argument, "matrix sum shape mismatch");
    IntMat out(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
}

IntMat operator-(const IntMat& a, const IntMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(Error::Kind::argument, "matrix difference shape mismatch");
    IntMat out(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
}

IntMat IntMat::pow(unsigned exponent) const {
    if (rows_ != cols_) fail(Error::Kind::argument, "matrix power needs a square matrix");
    IntMat result = identity(rows_), base = *this;
    while (exponent) {
        if (exponent & 1) result = result * base;
        base = base * base;
        exponent >>= 1;
    }
    return result;
}

IntMat IntMat::transposed() const {
    IntMat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

IntMat IntMat::vstack(const IntMat& a, const IntMat& b) {
    if (a.cols_ != b.cols_) fail(Error::Kind::argument, "vstack column mismatch");
    IntMat out(a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) out.at(a.rows_ + i, j) = b.at(i, j);
    return out;
}

IntMat IntMat::hstack(const IntMat& a, const IntMat& b) {
    if (a.rows_ != b.rows_) fail(Error::Kind::argument, "hstack row mismatch");
    IntMat out(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols_; ++j) out.at(i, a.cols_ + j) = b.at(i, j);
    }
    return out;
}

namespace {

// Column-style Hermite elimination: transforms h in place by unimodular
// column operations (mirrored into u when provided) so that each processed
// row has at most one surviving nonzero among the unprocessed columns.
// Returns the pivot column of each row (-1 for rows without one).
std::vector<int> hermite_columns(IntMat& h, IntMat* u) {
    int m = h.rows(), n = h.cols();
    std::vector<int> pivot_of_row(static_cast<size_t>(m), -1);
    int c = 0;
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < m; ++i) std::swap(h.at(i, a), h.at(i, b));
        if (u)
            for (int i = 0; i < u->rows(); ++i) std::swap(u->at(i, a), u->at(i, b));
    };
    auto axpy_col = [&](int dst, int src, const BigInt& factor) {
        if (factor.is_zero()) return;
        for (int i = 0; i < m; ++i) h.at(i, dst) -= factor * h.at(i, src);
        if (u)
            for (int i = 0; i < u->rows(); ++i) u->at(i, dst) -= factor * u->at(i, src);
    };
    auto negate_col = [&](int col) {
        for (int i = 0; i < m; ++i) h.at(i, col) = -h.at(i, col);
        if (u)
            for (int i = 0; i < u->rows(); ++i) u->at(i, col) = -u->at(i, col);
    };

    for (int r = 0; r < m && c < n; ++r) {
        while (true) {
            int best = -1;
            for (int j = c; j < n; ++j) {
                if (h.at(r, j).is_zero()) continue;
                if (best < 0 || BigInt::compare(h.at(r, j).abs(), h.at(r, best).abs()) < 0) best = j;
            }
            if (best < 0) break;
            swap_cols(c, best);
            bool clean = true;
            for (int j = c + 1; j < n; ++j) {
                if (h.at(r, j).is_zero()) continue;
                BigInt q = h.at(r, j) / h.at(r, c);
                axpy_col(j, c, q);
                if (!h.at(r, j).is_zero()) clean = false;
            }
            if (clean) break;
        }
        if (c < n && !h.at(r, c).is_zero()) {
            if (h.at(r, c).is_negative()) negate_col(c);
            pivot_of_row[static_cast<size_t>(r)] = c;
            ++c;
        }
    }
    return pivot_of_row;
}

std::vector<BigInt> clear_denominators(const std::vector<BigRational>& v) {
    BigInt lcm(1);
    for (const BigRational& x : v) {
        BigInt d = x.denominator();
        lcm = lcm / BigInt::gcd(lcm, d) * d;
    }
    std::vector<BigInt> out;
    out.reserve(v.size());
    for (const BigRational& x : v) out.push_back(x.numerator() * (lcm / x.denominator()));
    BigInt g;
    for (const BigInt& x : out) g = BigInt::gcd(g, x);
    if (!g.is_zero() && !g.is_one())
        for (BigInt& x : out) x = x / g;
    return out;
}

} // namespace

int IntMat::rank() const {
    IntMat h = *this;
    auto pivots = hermite_columns(h, nullptr);
    int rank = 0;
    for (int p : pivots)
        if (p >= 0) ++rank;
    return rank;
}

IntMat IntMat::kernel() const {
    IntSolveResult sol = solve_integer_system(*this, std::vector<BigInt>(static_cast<size_t>(rows_), BigInt()));
    return sol.kernel;
}

IntSolveResult solve_integer_system(const IntMat& a, const std::vector<BigInt>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        fail(Error::Kind::argument, "right-hand side size does not match matrix rows");
    int m = a.rows(), n = a.cols();
    IntMat h = a;
    IntMat u = IntMat::identity(n);
    std::vector<int> pivot_of_row = hermite_columns(h, &u);

    IntSolveResult result;
    // forward substitution over Q, tracking integrality
    std::vector<BigRational> y(static_cast<size_t>(n), BigRational());
    bool consistent = true, integral = true;
    for (int r = 0; r < m; ++r) {
        BigRational residual(b[static_cast<size_t>(r)]);
        for (int j = 0; j < n; ++j) {
            if (h.at(r, j).is_zero()) continue;
            if (j == pivot_of_row[static_cast<size_t>(r)]) continue;
            if (!y[static_cast<size_t>(j)].is_zero())
                residual -= BigRational(h.at(r, j)) * y[static_cast<size_t>(j)];
        }
        int pc = pivot_of_row[static_cast<size_t>(r)];
        if (pc >= 0) {
            y[static_cast<size_t>(pc)] = residual / BigRational(h.at(r, pc));
            if (!y[static_cast<size_t>(pc)].is_integer()) integral = false;
        } else if (!residual.is_zero()) {
            consistent = false;
            break;
        }
    }

    int rank = 0;
    for (int p : pivot_of_row)
        if (p >= 0) ++rank;
    IntMat kernel(n, n - rank);
    for (int j = rank; j < n; ++j)
        for (int i = 0; i < n; ++i) kernel.at(i, j - rank) = u.at(i, j);

    result.consistent = consistent;
    result.kernel = std::move(kernel);
    if (consistent && integral) {
        result.integral = true;
        std::vector<BigRational> x(static_cast<size_t>(n), BigRational());
        for (int i = 0; i < n; ++i) {
            BigRational acc;
            for (int j = 0; j < n; ++j)
                if (!y[static_cast<size_t>(j)].is_zero()) acc += BigRational(u.at(i, j)) * y[static_cast<size_t>(j)];
            x[static_cast<size_t>(i)] = acc;
        }
        result.particular.reserve(static_cast<size_t>(n));
        for (const BigRational& xi : x) result.particular.push_back(xi.numerator());
    }
    return result;
}

Subspace Subspace::span_of_columns(const IntMat& generators) {
    Subspace out(generators.rows());
    IntMat h = generators;
    auto pivots = hermite_columns(h, nullptr);
    int rank = 0;
    for (int p : pivots)
        if (p >= 0) ++rank;
    IntMat basis(generators.rows(), rank);
    for (int j = 0; j < rank; ++j) {
        std::vector<BigRational> col;
        col.reserve(static_cast<size_t>(generators.rows()));
        for (int i = 0; i < generators.rows(); ++i) col.emplace_back(h.at(i, j));
        std::vector<BigInt> cleared = clear_denominators(col);
        for (int i = 0; i < generators.rows(); ++i) basis.at(i, j) = cleared[static_cast<size_t>(i)];
    }
    out.basis_ = std::move(basis);
    return out;
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) fail(Error::Kind::argument, "subspace ambient dimension mismatch");
    if (other.dim() == 0) return true;
    return IntMat::hstack(basis_, other.basis_).rank() == dim();
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) fail(Error::Kind::argument, "subspace ambient dimension mismatch");
    return span_of_columns(IntMat::hstack(a.basis_, b.basis_));
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) fail(Error::Kind::argument, "subspace ambient dimension mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_);
    IntMat stacked = IntMat::hstack(a.basis_, b.basis_);
    IntMat ker = stacked.kernel();
    IntMat gens(a.ambient_, ker.cols());
    for (int k = 0; k < ker.cols(); ++k)
        for (int i = 0; i < a.ambient_; ++i) {
            BigInt acc;
            for (int j = 0; j < a.dim(); ++j) acc += a.basis_.at(i, j) * ker.at(j, k);
            gens.at(i, k) = acc;
        }
    return span_of_columns(gens);
}

Subspace Subspace::image_under(const IntMat& m) const {
    if (m.cols() != ambient_) fail(Error::Kind::argument, "map domain does not match subspace ambient space");
    if (dim() == 0) return Subspace(m.rows());
    return span_of_columns(m * basis_);
}

std::string IntMat::to_string() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        out += "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) out += " ";
            out += at(i, j).to_string();
        }
        out += "]\n";
    }
    return out;
}

} // namespace hilbzeta
