#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cjm/builders.hpp"

#include <algorithm>
#include <map>

using namespace cjm;

namespace {

std::vector<Rational> sorted(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("group algebra products are permutation composition") {
    auto inst = build_group_algebra(3);
    const AlgebraTable& A = inst.algebra();
    REQUIRE(A.dim() == 6);

    auto perms = all_permutations(3);
    std::map<std::vector<int>, Eigen::Index> idx;
    for (std::size_t i = 0; i < perms.size(); ++i)
        idx[perms[i].images()] = static_cast<Eigen::Index>(i);

    for (Eigen::Index i = 0; i < 6; ++i) {
        for (Eigen::Index j = 0; j < 6; ++j) {
            const auto& row = A.product(i, j);
            REQUIRE(row.size() == 1);
            auto composed = perms[static_cast<std::size_t>(i)].then(perms[static_cast<std::size_t>(j)]);
            CHECK(row[0].first == idx.at(composed.images()));
            CHECK(row[0].second == Rational(1));
        }
    }
    CHECK(exact_equal(A.identity_coeffs(), VectorXq(Element::unit(A, 0).coeffs)));
}

TEST_CASE("group jm elements are the transposition sums and commute") {
    auto inst = build_group_algebra(3);
    const AlgebraTable& A = inst.algebra();
    REQUIRE(inst.jm.size() == 3);
    CHECK(inst.jm[0].is_zero());

    auto perms = all_permutations(3);
    auto coeff_at = [&](const Element& e, const Permutation& w) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == w) return e.coeffs(static_cast<Eigen::Index>(i));
        return Rational(0);
    };
    CHECK(coeff_at(inst.jm[1], Permutation::transposition(3, 0, 1)) == Rational(1));
    CHECK(coeff_at(inst.jm[2], Permutation::transposition(3, 0, 2)) == Rational(1));
    CHECK(coeff_at(inst.jm[2], Permutation::transposition(3, 1, 2)) == Rational(1));
    CHECK(coeff_at(inst.jm[2], Permutation::transposition(3, 0, 1)) == Rational(0));

    for (const auto& a : inst.jm)
        for (const auto& b : inst.jm) CHECK(a * b == b * a);
}

TEST_CASE("murphy basis of the smallest group algebra, written out") {
    auto inst = build_group_algebra(2);
    const AlgebraTable& A = inst.algebra();
    // column 0 is 1 + s for the one-row cell, column 1 is the identity
    MatrixXq expected(2, 2);
    expected << Rational(1), Rational(1), Rational(1), Rational(0);
    CHECK(exact_equal(A.cell_to_comp(), expected));
    CHECK(A.datum().cell(0).label == "(2)");
    CHECK(A.datum().cell(1).label == "(1,1)");
    CHECK(A.basis_name(1) == "[2,1]");
}

TEST_CASE("group instance carries contents and per-cell multisets") {
    auto inst = build_group_algebra(3);
    CHECK(inst.family == "symmetric-group");
    CHECK(inst.contents.sequence(1) == std::vector<Rational>{0, 1, -1});
    REQUIRE(inst.cell_content_multisets.size() == 3);
    CHECK(sorted(inst.cell_content_multisets[1]) == std::vector<Rational>{-1, 0, 1});
    CHECK(inst.generators.size() == 2);
}

TEST_CASE("hecke quadratic relation and jm elements at q = 2") {
    auto inst = build_hecke_typeA(2, Rational(2));
    const AlgebraTable& A = inst.algebra();
    REQUIRE(A.dim() == 2);

    // T_s^2 = q + (q - 1) T_s
    const auto& row = A.product(1, 1);
    REQUIRE(row.size() == 2);
    Rational onCoeff(0), tsCoeff(0);
    for (const auto& [k, c] : row) (k == 0 ? onCoeff : tsCoeff) = c;
    CHECK(onCoeff == Rational(2));
    CHECK(tsCoeff == Rational(1));

    // L_2 = q^{-1} T_s T_s = 1 + (1 - 1/q) T_s
    REQUIRE(inst.jm.size() == 2);
    CHECK(inst.jm[0] == Element::identity(A));
    CHECK(inst.jm[1].coeffs(0) == Rational(1));
    CHECK(inst.jm[1].coeffs(1) == Rational(1, 2));

    CHECK(inst.contents.sequence(0) == std::vector<Rational>{1, 2});
    CHECK(inst.contents.sequence(1) == std::vector<Rational>{1, Rational(1, 2)});
}

TEST_CASE("the one-row murphy element is an eigenvector of L_2") {
    auto inst = build_hecke_typeA(2, Rational(2));
    const AlgebraTable& A = inst.algebra();
    Element m = Element{&A, A.cell_to_comp().col(0)};
    CHECK(m * inst.jm[1] == m * Rational(2)); // eigenvalue q
    CHECK(inst.jm[1] * m == Rational(2) * m);
}

TEST_CASE("hecke at q = 1 degenerates to the group table") {
    auto hecke = build_hecke_typeA(3, Rational(1));
    auto group = build_group_algebra(3);
    REQUIRE(hecke.algebra().dim() == group.algebra().dim());
    for (Eigen::Index i = 0; i < 6; ++i) {
        for (Eigen::Index j = 0; j < 6; ++j) {
            const auto& h = hecke.algebra().product(i, j);
            const auto& g = group.algebra().product(i, j);
            REQUIRE(h.size() == g.size());
            for (std::size_t k = 0; k < h.size(); ++k) {
                CHECK(h[k].first == g[k].first);
                CHECK(h[k].second == g[k].second);
            }
        }
    }
}

TEST_CASE("separation factors for the documented window") {
    auto f = separation_polynomial_factors(2, 2, Rational(2), {Rational(1), Rational(7)});
    CHECK(f.nonzero);
    REQUIRE(f.factors.size() == 5);
    CHECK(f.factors[0].value == Rational(1));
    CHECK(f.factors[1].value == Rational(3));
    CHECK(f.factors[2].value == Rational(-13, 2));
    CHECK(f.factors[3].value == Rational(-6));
    CHECK(f.factors[4].value == Rational(-5));
    CHECK(f.factors[0].label == "[1]_q");
    CHECK(f.factors[2].label == "q^-1 u_1 - u_2");
}

TEST_CASE("parameter validation rejects degenerate choices") {
    std::string why;
    CHECK(!make_validated_ak_params(2, 2, Rational(0), {1, 7}, &why).has_value());
    CHECK(!why.empty());
    CHECK(!make_validated_ak_params(2, 2, Rational(1), {1, 7}, &why).has_value());
    // q u_1 = u_2 kills a separation factor
    CHECK(!make_validated_ak_params(2, 2, Rational(2), {1, 2}, &why).has_value());
    CHECK(why.find("u_1") != std::string::npos);

    auto good = make_validated_ak_params(2, 2, Rational(2), {1, 7});
    REQUIRE(good.has_value());
    CHECK(good->validated);
}

TEST_CASE("automatic parameter search lands on the first clean window") {
    auto p = find_valid_params(2, 2);
    CHECK(p.q == Rational(2));
    REQUIRE(p.u.size() == 2);
    CHECK(p.u[0] == Rational(1));
    CHECK(p.u[1] == Rational(7));
    CHECK(p.validated);

    auto p3 = find_valid_params(3, 3);
    CHECK(p3.validated);
    CHECK(separation_polynomial_factors(3, 3, p3.q, p3.u).nonzero);
}

TEST_CASE("matrix unit model has the expected dimensions and diagonal jm") {
    auto one = build_ak_seminormal(find_valid_params(1, 2));
    CHECK(one.algebra().dim() == 2);

    auto inst = build_ak_seminormal(find_valid_params(2, 2));
    const AlgebraTable& A = inst.algebra();
    CHECK(A.dim() == 8);
    CHECK(A.datum().cell_count() == 5);
    CHECK(A.datum().member_count() == 6);

    // e_{st} e_{uv} = [t == u] e_{sv} within a cell, zero across cells
    for (Eigen::Index i = 0; i < A.dim(); ++i) {
        auto ki = A.datum().basis_key(i);
        for (Eigen::Index j = 0; j < A.dim(); ++j) {
            auto kj = A.datum().basis_key(j);
            const auto& row = A.product(i, j);
            if (ki.cell == kj.cell && ki.t == kj.s) {
                REQUIRE(row.size() == 1);
                CHECK(row[0].first == A.datum().basis_index(ki.cell, ki.s, kj.t));
                CHECK(row[0].second == Rational(1));
            } else {
                CHECK(row.empty());
            }
        }
    }

    // every jm element is diagonal on the matrix-unit basis
    for (const auto& L : inst.jm) {
        VectorXq cell = A.to_cellular(L.coeffs);
        for (Eigen::Index idx = 0; idx < A.dim(); ++idx) {
            auto k = A.datum().basis_key(idx);
            if (k.s != k.t) CHECK(cell(idx) == Rational(0));
        }
    }

    auto big = build_ak_seminormal(find_valid_params(3, 2));
    CHECK(big.algebra().dim() == 48);
    CHECK(big.algebra().datum().member_count() == 20);
}

TEST_CASE("the two-cell pair separates only through the cell order") {
    auto anti = build_counterexample_pair();
    const AlgebraTable& A = anti.algebra();
    CHECK(A.dim() == 2);
    CHECK(!A.datum().cell_lt(0, 1));
    CHECK(!A.datum().cell_lt(1, 0));
    CHECK(anti.jm.size() == 1);
    CHECK(anti.jm[0].is_zero());
    CHECK(anti.cell_content_multisets[0] == anti.cell_content_multisets[1]);

    auto cmp = build_counterexample_pair(true);
    CHECK(cmp.algebra().datum().cell_lt(0, 1) != cmp.algebra().datum().cell_lt(1, 0));

    // both variants are genuinely cellular
    for (bool comparable : {false, true}) {
        auto inst = build_counterexample_pair(comparable);
        CHECK(verify_algebra_structure(inst.algebra()).pass);
        CHECK(verify_cellularity(inst.algebra(), inst.generators).pass);
    }
}

TEST_CASE("builders validate their ranges") {
    CHECK_THROWS_AS(build_group_algebra(1), std::invalid_argument);
    CHECK_THROWS_AS(build_group_algebra(7), std::invalid_argument);
    CHECK_THROWS_AS(build_hecke_typeA(6, Rational(2)), std::invalid_argument);
    CHECK_THROWS_AS(build_hecke_typeA(3, Rational(0)), std::invalid_argument);
    AKParams raw{2, 2, Rational(2), {Rational(1), Rational(7)}, false};
    CHECK_THROWS_AS(build_ak_seminormal(raw), std::invalid_argument);
}
