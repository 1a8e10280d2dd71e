#pragma once

#include "hilbzeta/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hilbzeta {

// Exact dense integer matrix plus the little linear algebra this library
// needs: rank, kernels, column-space operations, and Hermite-style integer
// system solving.  All arithmetic is exact; no floating point.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols);
    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const BigInt& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
    bool is_zero() const;

    friend IntMat operator*(const IntMat& a, const IntMat& b);
    friend IntMat operator+(const IntMat& a, const IntMat& b);
    friend IntMat operator-(const IntMat& a, const IntMat& b);
    IntMat pow(unsigned exponent) const;
    IntMat transposed() const;

    // stack the rows of b beneath those of a (equal column counts)
    static IntMat vstack(const IntMat& a, const IntMat& b);
    // place the columns of b to the right of those of a (equal row counts)
    static IntMat hstack(const IntMat& a, const IntMat& b);

    int rank() const;

    // basis of { v : M v = 0 } as matrix columns (primitive integer vectors)
    IntMat kernel() const;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> data_;
};

// A subspace of Q^n represented by a spanning set of integer column vectors.
// Operations reduce to exact elimination; dimensions are exact.
class Subspace {
public:
    explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}
    static Subspace span_of_columns(const IntMat& generators);
    static Subspace full(int ambient_dim) { return span_of_columns(IntMat::identity(ambient_dim)); }

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.cols(); }
    const IntMat& basis() const { return basis_; }

    bool contains(const Subspace& other) const;
    static Subspace sum(const Subspace& a, const Subspace& b);
    static Subspace intersect(const Subspace& a, const Subspace& b);
    // image of this subspace under the linear map m (m has ambient_dim columns)
    Subspace image_under(const IntMat& m) const;

private:
    int ambient_;
    IntMat basis_; // ambient_ rows, dim columns, column-echelon reduced
};

// Solution of A x = b over the integers: one particular solution plus an
// integer basis of the homogeneous solutions (columns).  Uses a Hermite
// normal form of A.  `integral` is false when the system is solvable over Q
// but not over Z; `consistent` is false when it is not solvable at all.
struct IntSolveResult {
    bool consistent = false;
    bool integral = false;
    std::vector<BigInt> particular; // defined when integral
    IntMat kernel;                  // always defined when consistent over Q
};

IntSolveResult solve_integer_system(const IntMat& a, const std::vector<BigInt>& b);

} // namespace hilbzeta
