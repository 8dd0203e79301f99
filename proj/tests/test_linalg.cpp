#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cjm/linalg.hpp"

using namespace cjm;

namespace {

MatrixXq mat(std::initializer_list<std::initializer_list<long long>> rows) {
    MatrixXq m(static_cast<Eigen::Index>(rows.size()),
               static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& r : rows) {
        Eigen::Index j = 0;
        for (long long v : r) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

VectorXq vec(std::initializer_list<long long> entries) {
    VectorXq v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (long long e : entries) v(i++) = Rational(e);
    return v;
}

} // namespace

TEST_CASE("rref produces identity on an invertible matrix") {
    MatrixXq m = mat({{2, 1}, {1, 1}});
    auto pivots = rref_in_place(m);
    CHECK(pivots == std::vector<Eigen::Index>{0, 1});
    CHECK(exact_equal(m, mat({{1, 0}, {0, 1}})));
}

TEST_CASE("rank handles exact cancellation that floats would miss") {
    // row3 = row1 + row2 after scaling by awkward fractions
    MatrixXq m(3, 3);
    m << Rational(1, 3), Rational(1, 7), Rational(2),
         Rational(1, 11), Rational(5), Rational(-1, 2),
         Rational(1, 3) + Rational(1, 11), Rational(1, 7) + Rational(5), Rational(3, 2);
    CHECK(rank(m) == 2);
    CHECK(rank(mat({{0, 0}, {0, 0}})) == 0);
    CHECK(rank(mat({{1, 2, 3}})) == 1);
}

TEST_CASE("nullspace vectors annihilate the matrix and span the kernel") {
    MatrixXq m = mat({{1, 2, 3}, {2, 4, 6}});
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns) CHECK(is_exactly_zero(VectorXq(m * v)));
    // kernel basis is linearly independent
    MatrixXq stacked(3, 2);
    stacked.col(0) = ns[0];
    stacked.col(1) = ns[1];
    CHECK(rank(stacked) == 2);

    CHECK(nullspace(mat({{1, 0}, {0, 1}})).empty());
}

TEST_CASE("solve returns a witness or reports inconsistency") {
    MatrixXq m = mat({{1, 2}, {3, 4}});
    auto x = solve(m, vec({5, 6}));
    REQUIRE(x.has_value());
    CHECK(exact_equal(VectorXq(m * *x), vec({5, 6})));

    MatrixXq sing = mat({{1, 1}, {2, 2}});
    CHECK(solve(sing, vec({1, 3})) == std::nullopt);
    auto y = solve(sing, vec({1, 2}));
    REQUIRE(y.has_value());
    CHECK(exact_equal(VectorXq(sing * *y), vec({1, 2})));
}

TEST_CASE("determinant is exact and multiplicative") {
    CHECK(determinant(mat({{2, 1}, {1, 1}})) == Rational(1));
    CHECK(determinant(mat({{1, 2}, {2, 4}})) == Rational(0));
    MatrixXq a = mat({{1, 2, 0}, {0, 1, 3}, {4, 0, 1}});
    MatrixXq b = mat({{2, 0, 1}, {1, 1, 0}, {0, 5, 2}});
    CHECK(determinant(MatrixXq(a * b)) == determinant(a) * determinant(b));

    MatrixXq h(3, 3); // Hilbert, notoriously bad in floating point
    for (Eigen::Index i = 0; i < 3; ++i)
        for (Eigen::Index j = 0; j < 3; ++j) h(i, j) = Rational(1, i + j + 1);
    CHECK(determinant(h) == Rational(1, 2160));
}

TEST_CASE("inverse exists exactly when the determinant is nonzero") {
    MatrixXq a = mat({{1, 2}, {3, 5}});
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(exact_equal(MatrixXq(a * *inv), mat({{1, 0}, {0, 1}})));
    CHECK(inverse(mat({{1, 2}, {2, 4}})) == std::nullopt);
}

TEST_CASE("RowSpace tracks rank incrementally") {
    RowSpace<Rational> sp(3);
    CHECK(sp.insert(vec({1, 2, 3})));
    CHECK(!sp.insert(vec({2, 4, 6}))); // dependent, rank unchanged
    CHECK(sp.insert(vec({0, 1, 0})));
    CHECK(sp.rank() == 2);
    CHECK(sp.contains(vec({3, 7, 9}))); // 3*r1 + r2
    CHECK(!sp.contains(vec({0, 0, 1})));
    CHECK(sp.insert(vec({0, 0, 1})));
    CHECK(sp.rank() == 3);
    CHECK(sp.contains(vec({-5, 17, 4})));
}

TEST_CASE("subspace_equal compares spans, not generating sets") {
    std::vector<VectorXq> a{vec({1, 0, 1}), vec({0, 1, 1})};
    std::vector<VectorXq> b{vec({1, 1, 2}), vec({1, -1, 0}), vec({2, 0, 2})};
    CHECK(subspace_equal(a, b));

    std::vector<VectorXq> c{vec({1, 0, 0}), vec({0, 1, 0})};
    CHECK(!subspace_equal(a, c));

    std::vector<VectorXq> none;
    CHECK(subspace_equal(none, none));
    CHECK(!subspace_equal(a, none));
}
