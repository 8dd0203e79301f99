// End-to-end acceptance gate. Each numbered criterion prints exactly one
// PASS/FAIL line; the process exits nonzero if any line failed. Everything is
// exact arithmetic, so there are no tolerances anywhere.

#include "cjm/builders.hpp"
#include "cjm/center.hpp"
#include "cjm/seminormal.hpp"
#include "cjm/sympoly.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>
#include <vector>

using namespace cjm;

namespace {

int failures = 0;

void criterion(int idx, const std::string& label, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << idx << ": " << label;
    if (!pass && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

long long ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<VectorXq> center_by_stacking(const AlgebraTable& A) {
    Eigen::Index d = A.dim();
    MatrixXq stacked(d * d, d);
    for (Eigen::Index b = 0; b < d; ++b) {
        MatrixXq ad = MatrixXq::Zero(d, d);
        for (Eigen::Index i = 0; i < d; ++i) {
            for (const auto& [k, c] : A.product(i, b)) ad(k, i) += c;
            for (const auto& [k, c] : A.product(b, i)) ad(k, i) -= c;
        }
        stacked.middleRows(b * d, d) = ad;
    }
    return nullspace(stacked);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

int main() {
    // The instances every criterion below draws from. Building them up front
    // keeps each criterion's own timing honest.
    std::vector<AlgebraInstance> axiomInstances;
    axiomInstances.push_back(build_group_algebra(2));
    axiomInstances.push_back(build_group_algebra(3));
    axiomInstances.push_back(build_group_algebra(4));
    axiomInstances.push_back(build_hecke_typeA(3, Rational(2)));

    std::vector<AlgebraInstance> akInstances;
    for (int n = 1; n <= 3; ++n) akInstances.push_back(build_ak_seminormal(find_valid_params(n, 2)));

    auto counterexample = build_counterexample_pair();
    auto comparableControl = build_counterexample_pair(true);

    // 1: cellular axioms and jm axioms, each instance within the time budget.
    {
        bool ok = true;
        std::string detail;
        for (const auto& inst : axiomInstances) {
            auto t0 = std::chrono::steady_clock::now();
            auto cell = verify_cellularity(inst.algebra(), inst.generators);
            auto structure = verify_algebra_structure(inst.algebra());
            auto jm = verify_jm_axioms(inst.algebra(), inst.jm, inst.contents);
            long long elapsed = ms_since(t0);
            if (!cell.pass || !cell.failures.empty() || !structure.pass || !jm.report.pass ||
                !jm.report.failures.empty()) {
                ok = false;
                detail = inst.family + " reported failures";
            }
            if (elapsed >= 60000) {
                ok = false;
                detail = inst.family + " took " + std::to_string(elapsed) + " ms";
            }
        }
        criterion(1, "cellularity and jm axioms on the group and hecke instances", ok, detail);
    }

    // 2: separation on all of the above, vacuous for the antichain pair,
    // failing with a witness for the comparable-cells control.
    {
        bool ok = true;
        for (const auto& inst : axiomInstances)
            if (!verify_separation(inst.contents, inst.algebra().datum()).pass) ok = false;
        for (const auto& inst : akInstances)
            if (!verify_separation(inst.contents, inst.algebra().datum()).pass) ok = false;
        auto vac = verify_separation(counterexample.contents, counterexample.algebra().datum());
        if (!(vac.pass && vac.vacuous)) ok = false;
        auto ctrl = verify_separation(comparableControl.contents, comparableControl.algebra().datum());
        if (ctrl.pass || ctrl.witness.empty()) ok = false;
        criterion(2, "separation, including the vacuous and negative controls", ok);
    }

    // 3: the seminormal theorem suite on every gate-passing instance.
    {
        bool ok = true;
        std::string detail;
        auto run = [&](const AlgebraInstance& inst) {
            auto sys = build_seminormal(inst.algebra(), inst.jm, inst.contents);
            auto rep = verify_seminormal_theorems(inst.algebra(), inst.jm, inst.contents, sys);
            if (!rep.pass || !rep.failures.empty()) {
                ok = false;
                detail = inst.family + ": " + (rep.failures.empty() ? "failed" : rep.failures.front());
            }
        };
        for (const auto& inst : axiomInstances) run(inst);
        for (const auto& inst : akInstances) run(inst);
        criterion(3, "seminormal idempotents, gamma scalars and spectral identities", ok, detail);
    }

    // 4: center dimensions, cross-checked against the stacked-commutator
    // nullspace oracle.
    {
        bool ok = true;
        const int expected[] = {2, 3, 5};
        for (int n = 2; n <= 4; ++n) {
            const auto& inst = axiomInstances[static_cast<std::size_t>(n - 2)];
            auto fast = compute_center(inst.algebra());
            auto oracle = center_by_stacking(inst.algebra());
            if (static_cast<int>(fast.size()) != expected[n - 2]) ok = false;
            if (oracle.size() != fast.size()) ok = false;
            std::vector<VectorXq> fastVecs;
            for (const auto& e : fast) fastVecs.push_back(e.coeffs);
            if (!subspace_equal(fastVecs, oracle)) ok = false;
        }
        if (compute_center(counterexample.algebra()).size() != 2) ok = false;
        criterion(4, "center dimensions 2, 3, 5 and 2, against the nullspace oracle", ok);
    }

    // 5: the equivalence of the two main-theorem conditions on every
    // instance, with the literal subspace test backing condition one.
    {
        bool ok = true;
        std::string detail;
        auto run = [&](const AlgebraInstance& inst, bool expectBoth) {
            auto rep = main_theorem_check(inst.algebra(), inst.jm, inst.contents);
            auto center = compute_center(inst.algebra());
            auto span = sym_span(inst.algebra(), inst.jm);
            std::vector<VectorXq> cv, sv;
            for (const auto& e : center) cv.push_back(e.coeffs);
            for (const auto& e : span) sv.push_back(e.coeffs);
            bool literal = subspace_equal(cv, sv);
            if (!rep.applicable || !rep.equivalenceHolds || rep.conditionOne != rep.conditionTwo ||
                rep.conditionOne != expectBoth || literal != rep.conditionOne) {
                ok = false;
                detail = inst.family;
            }
        };
        for (const auto& inst : axiomInstances) run(inst, true);
        for (const auto& inst : akInstances) run(inst, true);
        run(counterexample, false);
        criterion(5, "main theorem equivalence, both directions", ok, detail);
    }

    // 6: the parameter criterion for the cyclotomic model.
    {
        bool ok = true;
        auto f = separation_polynomial_factors(2, 2, Rational(2), {Rational(1), Rational(7)});
        const Rational expected[] = {Rational(1), Rational(3), Rational(-13, 2), Rational(-6),
                                     Rational(-5)};
        if (!f.nonzero || f.factors.size() != 5) ok = false;
        for (std::size_t i = 0; ok && i < 5; ++i)
            if (!(f.factors[i].value == expected[i])) ok = false;

        Rational q(2);
        std::vector<Rational> u{1, 7};
        for (int n = 1; ok && n <= 3; ++n) {
            auto ms = enumerate_multipartitions(n, 2);
            for (std::size_t i = 0; ok && i < ms.size(); ++i) {
                for (std::size_t j = 0; ok && j < ms.size(); ++j) {
                    if (i == j) continue;
                    auto a = ak_contents_distinct(ms[i], ms[j], q, u);
                    auto ma = cell_content_multiset_ak(ms[i], q, u);
                    auto mb = cell_content_multiset_ak(ms[j], q, u);
                    std::sort(ma.begin(), ma.end());
                    std::sort(mb.begin(), mb.end());
                    if (!a.distinct || ma == mb) ok = false;
                    if (a.fired_case != 1 && a.fired_case != 2) ok = false;
                    bool sizesDiffer = ms[i].component_sizes() != ms[j].component_sizes();
                    if (a.fired_case != (sizesDiffer ? 1 : 2)) ok = false;
                }
            }
        }
        criterion(6, "separation factors and the two-case content analysis", ok);
    }

    // 7: residues determine the partition, exhaustively through n = 8.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (int n = 1; n <= 8 && ok; ++n) {
            auto ps = enumerate_partitions(n);
            for (std::size_t i = 0; i < ps.size() && ok; ++i)
                for (std::size_t j = 0; j < ps.size() && ok; ++j)
                    if (residue_multisets_equal(ps[i], ps[j]) != (i == j)) ok = false;
        }
        if (ms_since(t0) >= 10000) ok = false;
        criterion(7, "residue multisets separate partitions up to n = 8", ok);
    }

    // 8: the two supporting lemmas.
    {
        bool ok = true;
        for (int len = 1; len <= 3 && ok; ++len) {
            auto family = lmjm1_default_family(len);
            std::vector<std::vector<Rational>> all;
            std::vector<Rational> cur(static_cast<std::size_t>(len));
            std::function<void(int)> gen = [&](int pos) {
                if (pos == len) {
                    all.push_back(cur);
                    return;
                }
                for (int v = -2; v <= 2; ++v) {
                    cur[static_cast<std::size_t>(pos)] = Rational(v);
                    gen(pos + 1);
                }
            };
            gen(0);
            for (std::size_t i = 0; i < all.size() && ok; ++i) {
                for (std::size_t j = 0; j < all.size() && ok; ++j) {
                    auto r = lemma_lmjm1_check(all[i], all[j], family);
                    auto sx = all[i], sy = all[j];
                    std::sort(sx.begin(), sx.end());
                    std::sort(sy.begin(), sy.end());
                    bool kIsOne = r.proportional && r.k.has_value() && *r.k == Rational(1);
                    if (kIsOne != (sx == sy)) ok = false;
                }
            }
        }
        for (int n : {3, 4}) {
            auto inst = build_group_algebra(n);
            auto w = lemma_lmjm2_triangularize(inst.cell_content_multisets);
            if (!w || w->det.is_zero()) {
                ok = false;
                continue;
            }
            Rational diag(1);
            for (Eigen::Index i = 0; i < w->evaluation.rows(); ++i) {
                diag *= w->evaluation(i, i);
                for (Eigen::Index j = 0; j < i; ++j)
                    if (!(w->evaluation(i, j) == Rational(0))) ok = false;
            }
            if (!(diag == w->det)) ok = false;
        }
        std::vector<std::vector<Rational>> dup{{0, 1}, {1, 0}};
        if (lemma_lmjm2_triangularize(dup).has_value()) ok = false;
        criterion(8, "proportionality lemma and the triangular witness lemma", ok);
    }

    // 9: the spectral split of symmetric polynomials over the cells.
    {
        bool ok = true;
        std::string detail;
        std::vector<SymPoly> polys{SymPoly::power_sum(1), SymPoly::power_sum(2),
                                   SymPoly::elementary(2),
                                   SymPoly::power_sum(1) * SymPoly::power_sum(2)};
        auto run = [&](const AlgebraInstance& inst) {
            auto sys = build_seminormal(inst.algebra(), inst.jm, inst.contents);
            for (const auto& p : polys) {
                Element lhs = p.eval_at_elements(inst.jm);
                Element rhs = Element::zero(inst.algebra());
                for (std::size_t c = 0; c < sys.Flambda.size(); ++c)
                    rhs = rhs + sys.Flambda[c] * p.eval_at_contents(inst.cell_content_multisets[c]);
                if (!(lhs == rhs)) {
                    ok = false;
                    detail = inst.family + ": " + p.str();
                }
            }
        };
        for (const auto& inst : axiomInstances) run(inst);
        for (const auto& inst : akInstances) run(inst);
        criterion(9, "symmetric polynomials in jm elements split over the cells", ok, detail);
    }

    // 10: byte-identical reports from two real CLI invocations.
    {
        bool ok = true;
        std::string bin = CELLULAR_JM_BIN;
        std::string base = bin + " verify hecke-a --n 3 --q 2";
        int s1 = std::system((base + " --json acceptance_det1.json > /dev/null 2>&1").c_str());
        int s2 = std::system((base + " --json acceptance_det2.json > /dev/null 2>&1").c_str());
        auto exited_zero = [](int status) { return status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0; };
        if (!exited_zero(s1) || !exited_zero(s2)) ok = false;
        std::string a = slurp("acceptance_det1.json");
        std::string b = slurp("acceptance_det2.json");
        if (a.empty() || a != b) ok = false;
        std::remove("acceptance_det1.json");
        std::remove("acceptance_det2.json");
        criterion(10, "two identical cli runs emit identical report bytes", ok);
    }

    if (failures == 0) {
        std::cout << "acceptance: all 10 criteria hold" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria failed" << std::endl;
    return 1;
}
