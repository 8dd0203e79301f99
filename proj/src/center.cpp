#include "cjm/center.hpp"

#include "cjm/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace cjm {

std::vector<Element> compute_center(const AlgebraTable& A) {
    Eigen::Index n = A.dim();
    // Candidate space, intersected with one commutator kernel at a time.
    MatrixXq basis = MatrixXq::Identity(n, n);
    for (Eigen::Index j = 0; j < n && basis.cols() > 0; ++j) {
        VectorXq ej = VectorXq::Zero(n);
        ej[j] = Rational(1);
        MatrixXq mapped(n, basis.cols());
        for (Eigen::Index c = 0; c < basis.cols(); ++c)
            mapped.col(c) = A.multiply(basis.col(c), ej) - A.multiply(ej, basis.col(c));
        std::vector<VectorXq> kernel = nullspace(mapped);
        MatrixXq next(n, static_cast<Eigen::Index>(kernel.size()));
        for (std::size_t k = 0; k < kernel.size(); ++k) next.col(static_cast<Eigen::Index>(k)) = basis * kernel[k];
        basis = std::move(next);
    }
    std::vector<Element> out;
    for (Eigen::Index c = 0; c < basis.cols(); ++c) out.push_back(Element{&A, VectorXq(basis.col(c))});
    return out;
}

namespace {

std::vector<Element> sym_generators(const AlgebraTable& A, const std::vector<Element>& jm) {
    std::vector<Element> gens{Element::identity(A)};
    for (int k = 1; k <= static_cast<int>(jm.size()); ++k)
        gens.push_back(SymPoly::elementary(k).eval_at_elements(jm));
    return gens;
}

} // namespace

std::vector<Element> sym_span(const AlgebraTable& A, const std::vector<Element>& jm) {
    RowSpace<Rational> space(A.dim());
    std::vector<Element> pool;
    auto adjoin = [&](const Element& e) {
        if (space.insert(e.coeffs)) {
            pool.push_back(e);
            return true;
        }
        return false;
    };
    for (const auto& g : sym_generators(A, jm)) adjoin(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t frozen = pool.size();
        for (std::size_t i = 0; i < frozen; ++i)
            for (std::size_t j = i; j < frozen; ++j)
                if (adjoin(pool[i] * pool[j])) grew = true;
    }
    std::vector<Element> out;
    for (const auto& row : space.basis()) out.push_back(Element{&A, row});
    return out;
}

VerificationReport verify_prop_sym_central(const AlgebraTable& A, const std::vector<Element>& jm) {
    VerificationReport rep;
    rep.name = "sym-central";
    std::vector<Element> gens = sym_generators(A, jm);
    for (std::size_t k = 0; k < gens.size() && rep.failures.size() < 8; ++k) {
        for (Eigen::Index j = 0; j < A.dim(); ++j) {
            Element b = Element::unit(A, j);
            if (!(gens[k] * b == b * gens[k])) {
                rep.fail("e_" + std::to_string(k) + "(L) does not commute with " + A.basis_name(j));
                break;
            }
        }
    }
    return rep;
}

VerificationReport verify_prop_converse(const AlgebraTable& A, const std::vector<Element>& jm,
                                        const ContentTable& contents) {
    VerificationReport rep;
    rep.name = "within-cell-contents";
    const CellDatum& D = A.datum();
    int m = static_cast<int>(jm.size());
    for (int cell = 0; cell < D.cell_count() && rep.failures.size() < 8; ++cell) {
        int sz = static_cast<int>(D.cell(cell).members.size());
        int first = D.global_member(cell, 0);
        std::vector<Rational> reference = contents.sequence(first);
        std::sort(reference.begin(), reference.end());
        for (int s = 1; s < sz; ++s) {
            int global = D.global_member(cell, s);
            std::vector<Rational> other = contents.sequence(global);
            std::sort(other.begin(), other.end());
            if (other == reference) continue;
            std::string witness = "no separating power sum found";
            for (int k = 1; k <= m; ++k) {
                SymPoly p = SymPoly::power_sum(k);
                Rational a = p.eval_at_contents(contents.sequence(first));
                Rational b = p.eval_at_contents(contents.sequence(global));
                if (!(a == b)) {
                    witness = "p_" + std::to_string(k) + " takes " + a.str() + " vs " + b.str();
                    break;
                }
            }
            rep.fail("content multisets differ inside cell " + D.cell(cell).label + ": " +
                     D.member_label(first) + " vs " + D.member_label(global) + " (" + witness + ")");
        }
    }
    return rep;
}

std::vector<SymPoly> lmjm1_default_family(int m) {
    std::vector<SymPoly> family{SymPoly::one()};
    for (int k = 1; k <= m; ++k) family.push_back(SymPoly::power_sum(k));
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) family.push_back(SymPoly::power_sum(i) * SymPoly::power_sum(j));
    return family;
}

Lmjm1Result lemma_lmjm1_check(const std::vector<Rational>& x, const std::vector<Rational>& y,
                              const std::vector<SymPoly>& family) {
    Lmjm1Result out;
    if (x.size() != y.size()) return out;
    std::optional<Rational> k;
    for (const auto& p : family) {
        Rational px = p.eval_at_contents(x);
        Rational py = p.eval_at_contents(y);
        if (py.is_zero()) {
            if (!px.is_zero()) return out;
            continue;
        }
        Rational candidate = px / py;
        if (!k)
            k = candidate;
        else if (!(*k == candidate))
            return out;
    }
    out.proportional = true;
    out.k = k ? *k : Rational(1);
    return out;
}

std::optional<Lmjm2Witness> lemma_lmjm2_triangularize(const std::vector<std::vector<Rational>>& contentVectors) {
    if (contentVectors.empty()) throw std::invalid_argument("lemma_lmjm2_triangularize: no content vectors");
    std::size_t m = contentVectors.front().size();
    for (const auto& v : contentVectors)
        if (v.size() != m) throw std::invalid_argument("lemma_lmjm2_triangularize: ragged content vectors");
    const int n = static_cast<int>(contentVectors.size());
    const int budget = static_cast<int>(m) * n;

    // Greedy family: power-sum products by increasing degree, keeping those
    // whose evaluation rows grow the span.
    std::vector<SymPoly> polys;
    MatrixXq M(n, n);
    RowSpace<Rational> rows(n);
    auto try_poly = [&](const SymPoly& p) {
        VectorXq row(n);
        for (int j = 0; j < n; ++j) row[j] = p.eval_at_contents(contentVectors[static_cast<std::size_t>(j)]);
        if (!rows.insert(row)) return;
        M.row(static_cast<Eigen::Index>(polys.size())) = row.transpose();
        polys.push_back(p);
    };
    try_poly(SymPoly::one());
    for (int d = 1; d <= budget && static_cast<int>(polys.size()) < n; ++d) {
        for (const Partition& kappa : enumerate_partitions(d)) {
            SymPoly p = SymPoly::one();
            for (int part : kappa.parts) p = p * SymPoly::power_sum(part);
            try_poly(p);
            if (static_cast<int>(polys.size()) == n) break;
        }
    }
    if (static_cast<int>(polys.size()) < n) return std::nullopt;

    Lmjm2Witness witness;
    witness.degreeBudget = budget;
    Rational before = determinant(M);

    // Elimination below the diagonal; a vanished pivot is repaired by adding
    // a later row, so the determinant never changes.
    for (int k = 0; k < n; ++k) {
        if (M(k, k) == Rational(0)) {
            for (int r = k + 1; r < n; ++r) {
                if (!(M(r, k) == Rational(0))) {
                    M.row(k) += M.row(r);
                    polys[static_cast<std::size_t>(k)] =
                        polys[static_cast<std::size_t>(k)] + polys[static_cast<std::size_t>(r)];
                    break;
                }
            }
        }
        for (int r = k + 1; r < n; ++r) {
            Rational f = M(r, k) / M(k, k);
            if (f.is_zero()) continue;
            M.row(r) -= f * M.row(k);
            polys[static_cast<std::size_t>(r)] = polys[static_cast<std::size_t>(r)] - f * polys[static_cast<std::size_t>(k)];
        }
    }
    Rational diagProduct(1);
    for (int k = 0; k < n; ++k) diagProduct *= M(k, k);
    if (!(diagProduct == before) || diagProduct.is_zero())
        throw std::logic_error("lemma_lmjm2_triangularize: elimination changed the determinant");

    witness.polys = std::move(polys);
    witness.evaluation = std::move(M);
    witness.det = diagProduct;
    return witness;
}

CenterReport main_theorem_check(const AlgebraTable& A, const std::vector<Element>& jm,
                                const ContentTable& contents) {
    CenterReport report;
    const CellDatum& D = A.datum();

    VerificationReport hyp = verify_prop_sym_central(A, jm);
    if (!hyp.pass) {
        report.applicable = false;
        report.hypothesisFailures = hyp.failures;
        return report;
    }

    report.centerBasis = compute_center(A);
    report.symSpanBasis = sym_span(A, jm);
    std::vector<VectorXq> centerVecs, spanVecs;
    for (const auto& e : report.centerBasis) centerVecs.push_back(e.coeffs);
    for (const auto& e : report.symSpanBasis) spanVecs.push_back(e.coeffs);
    report.conditionOne = subspace_equal(centerVecs, spanVecs);

    std::vector<std::vector<Rational>> cellContents;
    for (int cell = 0; cell < D.cell_count(); ++cell)
        cellContents.push_back(contents.sequence(D.global_member(cell, 0)));
    DistinctnessResult distinct = content_multisets_distinct(cellContents);
    report.conditionTwo = distinct.distinct;
    if (distinct.witness)
        report.collidingCells = std::make_pair(D.cell(static_cast<int>(distinct.witness->first)).label,
                                               D.cell(static_cast<int>(distinct.witness->second)).label);

    report.equivalenceHolds = (report.conditionOne == report.conditionTwo);

    if (report.conditionTwo) {
        report.triangularWitness = lemma_lmjm2_triangularize(cellContents);
        if (!report.triangularWitness)
            report.notes.push_back("distinct content multisets but no triangular family found");
    }
    return report;
}

} // namespace cjm
