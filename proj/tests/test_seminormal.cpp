#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cjm/builders.hpp"
#include "cjm/seminormal.hpp"
#include "cjm/sympoly.hpp"

using namespace cjm;

TEST_CASE("the gate wants all content sequences pairwise distinct") {
    auto group = build_group_algebra(3);
    CHECK(seminormal_applicable(group.contents, group.algebra().datum()).applicable);

    auto pair = build_counterexample_pair();
    auto gate = seminormal_applicable(pair.contents, pair.algebra().datum());
    CHECK(!gate.applicable);
    CHECK(gate.reason.find("lambda#1") != std::string::npos);
    CHECK(gate.reason.find("mu#1") != std::string::npos);
}

TEST_CASE("interpolation idempotents of the two-dimensional group algebra") {
    auto inst = build_group_algebra(2);
    const AlgebraTable& A = inst.algebra();

    Element f0 = compute_FT(A, inst.jm, inst.contents, 0);
    CHECK(f0.coeffs(0) == Rational(1, 2));
    CHECK(f0.coeffs(1) == Rational(1, 2));
    Element f1 = compute_FT(A, inst.jm, inst.contents, 1);
    CHECK(f1.coeffs(0) == Rational(1, 2));
    CHECK(f1.coeffs(1) == Rational(-1, 2));

    CHECK(f0 * f0 == f0);
    CHECK(f1 * f1 == f1);
    CHECK((f0 * f1).is_zero());
    CHECK(f0 + f1 == Element::identity(A));
}

TEST_CASE("assembled system carries the classical gamma scalars") {
    auto inst = build_group_algebra(3);
    auto sys = build_seminormal(inst.algebra(), inst.jm, inst.contents);
    CHECK(sys.constructionFailures.empty());
    REQUIRE(sys.gamma.size() == 4);
    CHECK(sys.gamma[0] == Rational(6));
    CHECK(sys.gamma[1] == Rational(2));
    CHECK(sys.gamma[2] == Rational(3, 2));
    CHECK(sys.gamma[3] == Rational(1));
    CHECK(sys.FT.size() == 4);
    CHECK(sys.Flambda.size() == 3);
    CHECK(sys.fBasis.size() == static_cast<std::size_t>(inst.algebra().dim()));
}

TEST_CASE("full theorem suite holds on every gate-passing family") {
    auto check = [](const AlgebraInstance& inst) {
        auto sys = build_seminormal(inst.algebra(), inst.jm, inst.contents);
        auto rep = verify_seminormal_theorems(inst.algebra(), inst.jm, inst.contents, sys);
        INFO(inst.family);
        for (const auto& f : rep.failures) INFO(f);
        CHECK(rep.pass);
    };
    check(build_group_algebra(2));
    check(build_group_algebra(3));
    check(build_hecke_typeA(2, Rational(2)));
    check(build_hecke_typeA(3, Rational(3)));
    check(build_ak_seminormal(find_valid_params(2, 2)));
}

TEST_CASE("a shuffled content table is caught by the theorem suite") {
    auto inst = build_group_algebra(2);
    MatrixXq shuffled(2, 2);
    shuffled(0, 0) = inst.contents.content(1, 1);
    shuffled(0, 1) = inst.contents.content(1, 2);
    shuffled(1, 0) = inst.contents.content(0, 1);
    shuffled(1, 1) = inst.contents.content(0, 2);
    ContentTable wrong(shuffled);

    // sequences are still pairwise distinct, so the gate happily lets it in
    CHECK(seminormal_applicable(wrong, inst.algebra().datum()).applicable);
    auto sys = build_seminormal(inst.algebra(), inst.jm, wrong);
    auto rep = verify_seminormal_theorems(inst.algebra(), inst.jm, wrong, sys);
    CHECK(!rep.pass);
}

TEST_CASE("a duplicated content row kills gamma extraction or the axioms") {
    auto inst = build_group_algebra(3);
    MatrixXq copied(4, 3);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 3; ++c) copied(r, c) = inst.contents.content(r == 2 ? 1 : r, c + 1);
    ContentTable wrong(copied);
    CHECK(!seminormal_applicable(wrong, inst.algebra().datum()).applicable);
}

TEST_CASE("symmetric polynomials in the jm elements split over the cells") {
    std::vector<SymPoly> polys{SymPoly::power_sum(1), SymPoly::power_sum(2), SymPoly::elementary(2),
                               SymPoly::power_sum(1) * SymPoly::power_sum(2)};
    auto check = [&](const AlgebraInstance& inst) {
        const AlgebraTable& A = inst.algebra();
        auto sys = build_seminormal(A, inst.jm, inst.contents);
        for (const auto& p : polys) {
            Element lhs = p.eval_at_elements(inst.jm);
            Element rhs = Element::zero(A);
            for (std::size_t c = 0; c < sys.Flambda.size(); ++c)
                rhs = rhs + sys.Flambda[c] * p.eval_at_contents(inst.cell_content_multisets[c]);
            INFO(inst.family << " " << p.str());
            CHECK(lhs == rhs);
        }
    };
    check(build_group_algebra(2));
    check(build_group_algebra(3));
    check(build_hecke_typeA(2, Rational(2)));
    check(build_ak_seminormal(find_valid_params(2, 2)));
}
