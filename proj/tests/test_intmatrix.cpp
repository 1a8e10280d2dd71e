#include <doctest.h>

#include "hilbzeta/intmatrix.hpp"

#include <random>

using namespace hilbzeta;

namespace {

IntMat from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows.begin()->size()) : 0;
    IntMat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (long long v : row) m.at(i, j++) = BigInt(v);
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("rank and kernel of small matrices") {
    IntMat m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(m.rank() == 2);
    IntMat k = m.kernel();
    CHECK(k.cols() == 1);
    CHECK((m * k).is_zero());

    CHECK(IntMat::identity(4).rank() == 4);
    CHECK(IntMat(3, 3).rank() == 0);
    CHECK(IntMat(3, 3).kernel().cols() == 3);
}

TEST_CASE("integer system solving") {
    // unique integer solution
    IntMat a = from_rows({{2, 1}, {1, 1}});
    IntSolveResult sol = solve_integer_system(a, {BigInt(5), BigInt(3)});
    REQUIRE(sol.consistent);
    REQUIRE(sol.integral);
    CHECK(sol.particular == std::vector<BigInt>{BigInt(2), BigInt(1)});
    CHECK(sol.kernel.cols() == 0);

    // inconsistent
    IntMat b = from_rows({{1, 1}, {1, 1}});
    IntSolveResult bad = solve_integer_system(b, {BigInt(1), BigInt(2)});
    CHECK(!bad.consistent);

    // solvable over Q but not over Z
    IntMat c = from_rows({{2}});
    IntSolveResult frac = solve_integer_system(c, {BigInt(1)});
    CHECK(frac.consistent);
    CHECK(!frac.integral);

    // underdetermined: kernel has a basis and particular solves
    IntMat d = from_rows({{1, 1, 1}});
    IntSolveResult under = solve_integer_system(d, {BigInt(6)});
    REQUIRE(under.consistent);
    REQUIRE(under.integral);
    CHECK(under.kernel.cols() == 2);
    BigInt sum;
    for (const BigInt& v : under.particular) sum += v;
    CHECK(sum == BigInt(6));
    CHECK((d * under.kernel).is_zero());
}

TEST_CASE("random solvable systems round trip") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 150; ++trial) {
        int rows = 1 + trial % 4, cols = 1 + (trial / 2) % 5;
        IntMat a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) a.at(i, j) = BigInt(entry(rng));
        std::vector<BigInt> x(static_cast<size_t>(cols));
        for (auto& v : x) v = BigInt(entry(rng));
        std::vector<BigInt> b(static_cast<size_t>(rows));
        for (int i = 0; i < rows; ++i) {
            BigInt acc;
            for (int j = 0; j < cols; ++j) acc += a.at(i, j) * x[static_cast<size_t>(j)];
            b[static_cast<size_t>(i)] = acc;
        }
        IntSolveResult sol = solve_integer_system(a, b);
        REQUIRE(sol.consistent);
        REQUIRE(sol.integral);
        // particular really solves
        for (int i = 0; i < rows; ++i) {
            BigInt acc;
            for (int j = 0; j < cols; ++j) acc += a.at(i, j) * sol.particular[static_cast<size_t>(j)];
            CHECK(acc == b[static_cast<size_t>(i)]);
        }
        // kernel columns annihilate
        CHECK((a * sol.kernel).is_zero());
        CHECK(sol.kernel.cols() == cols - a.rank());
    }
}

TEST_CASE("subspace operations") {
    // span{(1,0,0),(0,1,0)} and span{(0,1,0),(0,0,1)} intersect in span{(0,1,0)}
    IntMat g1(3, 2), g2(3, 2);
    g1.at(0, 0) = BigInt(1);
    g1.at(1, 1) = BigInt(1);
    g2.at(1, 0) = BigInt(1);
    g2.at(2, 1) = BigInt(1);
    Subspace a = Subspace::span_of_columns(g1);
    Subspace b = Subspace::span_of_columns(g2);
    CHECK(a.dim() == 2);
    Subspace cap = Subspace::intersect(a, b);
    CHECK(cap.dim() == 1);
    CHECK(a.contains(cap));
    CHECK(b.contains(cap));
    Subspace sum = Subspace::sum(a, b);
    CHECK(sum.dim() == 3);
    CHECK(sum.contains(a));

    // dimension formula dim(A) + dim(B) = dim(A+B) + dim(A/\B) on random pairs
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 4 + trial % 3;
        IntMat ga(n, 2), gb(n, 3);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < 2; ++j) ga.at(i, j) = BigInt(entry(rng));
            for (int j = 0; j < 3; ++j) gb.at(i, j) = BigInt(entry(rng));
        }
        Subspace sa = Subspace::span_of_columns(ga), sb = Subspace::span_of_columns(gb);
        CHECK(sa.dim() + sb.dim() ==
              Subspace::sum(sa, sb).dim() + Subspace::intersect(sa, sb).dim());
    }
}
