#include "cjm/cell_algebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cjm {

namespace {

void check_poset(const std::vector<std::vector<bool>>& leq, const std::string& what) {
    std::size_t n = leq.size();
    for (const auto& row : leq)
        if (row.size() != n) throw std::invalid_argument(what + ": relation matrix not square");
    for (std::size_t a = 0; a < n; ++a) {
        if (!leq[a][a]) throw std::invalid_argument(what + ": relation not reflexive");
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && leq[a][b] && leq[b][a]) throw std::invalid_argument(what + ": relation not antisymmetric");
            for (std::size_t c = 0; c < n; ++c)
                if (leq[a][b] && leq[b][c] && !leq[a][c])
                    throw std::invalid_argument(what + ": relation not transitive");
        }
    }
}

} // namespace

CellDatum::CellDatum(std::vector<CellInfo> cells, std::vector<std::vector<bool>> cell_leq,
                     std::string order_note)
    : cells_(std::move(cells)), cell_leq_(std::move(cell_leq)), order_note_(std::move(order_note)) {
    if (cells_.empty()) throw std::invalid_argument("CellDatum: need at least one cell");
    if (cell_leq_.size() != cells_.size()) throw std::invalid_argument("CellDatum: cell order size mismatch");
    check_poset(cell_leq_, "CellDatum cell order");
    for (const auto& c : cells_) {
        if (c.members.empty()) throw std::invalid_argument("CellDatum: cell with no members");
        if (c.member_leq.size() != c.members.size())
            throw std::invalid_argument("CellDatum: member order size mismatch");
        check_poset(c.member_leq, "CellDatum member order of " + c.label);
    }
    for (const auto& c : cells_) {
        memberOffset_.push_back(memberTotal_);
        basisOffset_.push_back(dim_);
        int sz = static_cast<int>(c.members.size());
        memberTotal_ += sz;
        dim_ += static_cast<Eigen::Index>(sz) * sz;
    }
}

std::pair<int, int> CellDatum::member_of(int globalIdx) const {
    if (globalIdx < 0 || globalIdx >= memberTotal_) throw std::out_of_range("CellDatum: member index");
    int c = cell_count() - 1;
    while (memberOffset_[static_cast<std::size_t>(c)] > globalIdx) --c;
    return {c, globalIdx - memberOffset_[static_cast<std::size_t>(c)]};
}

std::string CellDatum::member_label(int globalIdx) const {
    auto [c, s] = member_of(globalIdx);
    return cells_[static_cast<std::size_t>(c)].label + "#" + std::to_string(s + 1);
}

Eigen::Index CellDatum::basis_index(int cell, int s, int t) const {
    int sz = static_cast<int>(cells_[static_cast<std::size_t>(cell)].members.size());
    return basisOffset_[static_cast<std::size_t>(cell)] + static_cast<Eigen::Index>(s) * sz + t;
}

CellDatum::BasisKey CellDatum::basis_key(Eigen::Index idx) const {
    if (idx < 0 || idx >= dim_) throw std::out_of_range("CellDatum: basis index");
    int c = cell_count() - 1;
    while (basisOffset_[static_cast<std::size_t>(c)] > idx) --c;
    Eigen::Index off = idx - basisOffset_[static_cast<std::size_t>(c)];
    int sz = static_cast<int>(cells_[static_cast<std::size_t>(c)].members.size());
    return BasisKey{c, static_cast<int>(off / sz), static_cast<int>(off % sz)};
}

std::string CellDatum::basis_label(Eigen::Index idx) const {
    BasisKey k = basis_key(idx);
    const CellInfo& c = cells_[static_cast<std::size_t>(k.cell)];
    return "C[" + c.label + ";" + c.members[static_cast<std::size_t>(k.s)] + ";" +
           c.members[static_cast<std::size_t>(k.t)] + "]";
}

AlgebraTable::AlgebraTable(CellDatum datum, std::vector<ProductRow> products, MatrixXq involution,
                           VectorXq identity, MatrixXq cell_to_comp, std::vector<std::string> basis_names)
    : datum_(std::move(datum)),
      dim_(datum_.dim()),
      products_(std::move(products)),
      involution_(std::move(involution)),
      identity_(std::move(identity)),
      cellToComp_(std::move(cell_to_comp)),
      basisNames_(std::move(basis_names)) {
    if (static_cast<Eigen::Index>(products_.size()) != dim_ * dim_)
        throw std::invalid_argument("AlgebraTable: product table size mismatch");
    if (involution_.rows() != dim_ || involution_.cols() != dim_)
        throw std::invalid_argument("AlgebraTable: involution size mismatch");
    if (identity_.rows() != dim_) throw std::invalid_argument("AlgebraTable: identity size mismatch");
    if (cellToComp_.rows() != dim_ || cellToComp_.cols() != dim_)
        throw std::invalid_argument("AlgebraTable: cellToComp size mismatch");
    if (static_cast<Eigen::Index>(basisNames_.size()) != dim_)
        throw std::invalid_argument("AlgebraTable: basis name count mismatch");
    auto inv = inverse(cellToComp_);
    if (!inv) throw std::invalid_argument("AlgebraTable: cellular basis is not a basis (singular change of basis)");
    compToCell_ = std::move(*inv);
}

VectorXq AlgebraTable::multiply(const VectorXq& a, const VectorXq& b) const {
    if (a.rows() != dim_ || b.rows() != dim_) throw std::invalid_argument("AlgebraTable: element size mismatch");
    VectorXq out = VectorXq::Zero(dim_);
    for (Eigen::Index i = 0; i < dim_; ++i) {
        if (a[i] == Rational(0)) continue;
        for (Eigen::Index j = 0; j < dim_; ++j) {
            if (b[j] == Rational(0)) continue;
            Rational f = a[i] * b[j];
            for (const auto& [k, c] : product(i, j)) out[k] += f * c;
        }
    }
    return out;
}

Element Element::unit(const AlgebraTable& a, Eigen::Index i) {
    Element e = zero(a);
    e.coeffs[i] = Rational(1);
    return e;
}

namespace {
void require_same_algebra(const Element& a, const Element& b) {
    if (a.alg == nullptr || a.alg != b.alg) throw std::invalid_argument("Element: algebra mismatch");
}
} // namespace

Element Element::operator+(const Element& o) const {
    require_same_algebra(*this, o);
    return {alg, VectorXq(coeffs + o.coeffs)};
}

Element Element::operator-(const Element& o) const {
    require_same_algebra(*this, o);
    return {alg, VectorXq(coeffs - o.coeffs)};
}

Element Element::operator*(const Element& o) const {
    require_same_algebra(*this, o);
    return {alg, alg->multiply(coeffs, o.coeffs)};
}

ContentTable::ContentTable(MatrixXq content_of) : contentOf_(std::move(content_of)) {
    for (Eigen::Index i = 0; i < contentOf_.cols(); ++i) {
        std::vector<Rational> set;
        for (Eigen::Index t = 0; t < contentOf_.rows(); ++t) set.push_back(contentOf_(t, i));
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        contentSets_.push_back(std::move(set));
    }
}

std::vector<Rational> ContentTable::sequence(int member) const {
    std::vector<Rational> seq;
    seq.reserve(static_cast<std::size_t>(jm_count()));
    for (int i = 1; i <= jm_count(); ++i) seq.push_back(content(member, i));
    return seq;
}

VerificationReport verify_algebra_structure(const AlgebraTable& A) {
    VerificationReport rep;
    rep.name = "algebra-structure";
    Eigen::Index n = A.dim();

    Element one = Element::identity(A);
    for (Eigen::Index i = 0; i < n && rep.failures.size() < 8; ++i) {
        Element e = Element::unit(A, i);
        if (!(one * e == e) || !(e * one == e)) rep.fail("identity fails on basis element " + A.basis_name(i));
    }

    // Associativity on basis triples.
    auto assoc = [&](Eigen::Index i, Eigen::Index j, Eigen::Index k) {
        Element a = Element::unit(A, i), b = Element::unit(A, j), c = Element::unit(A, k);
        if (!((a * b) * c == a * (b * c)))
            rep.fail("associativity fails on (" + A.basis_name(i) + ", " + A.basis_name(j) + ", " +
                     A.basis_name(k) + ")");
    };
    if (n <= 36) {
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                for (Eigen::Index k = 0; k < n && rep.failures.size() < 8; ++k) assoc(i, j, k);
    } else {
        std::mt19937 rng(20260814u);
        std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
        for (int trial = 0; trial < 400 && rep.failures.size() < 8; ++trial) assoc(pick(rng), pick(rng), pick(rng));
    }

    // Involution: order two and anti-automorphism.
    if (!exact_equal(MatrixXq(A.involution() * A.involution()), MatrixXq(MatrixXq::Identity(n, n))))
        rep.fail("involution is not an involution (square differs from identity)");
    auto anti = [&](Eigen::Index i, Eigen::Index j) {
        Element a = Element::unit(A, i), b = Element::unit(A, j);
        if (!((a * b).involute() == b.involute() * a.involute()))
            rep.fail("involution not anti-multiplicative on (" + A.basis_name(i) + ", " + A.basis_name(j) + ")");
    };
    if (n <= 36) {
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n && rep.failures.size() < 8; ++j) anti(i, j);
    } else {
        std::mt19937 rng(20260815u);
        std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
        for (int trial = 0; trial < 600 && rep.failures.size() < 8; ++trial) anti(pick(rng), pick(rng));
    }
    return rep;
}

namespace {

// Closure of {1} ∪ generators under products, capped once the span stops
// growing. Returns the reached rank.
Eigen::Index span_closure_rank(const AlgebraTable& A, const std::vector<Element>& generators) {
    RowSpace<Rational> space(A.dim());
    std::vector<Element> pool;
    auto adjoin = [&](const Element& e) {
        if (space.insert(e.coeffs)) {
            pool.push_back(e);
            return true;
        }
        return false;
    };
    adjoin(Element::identity(A));
    for (const auto& g : generators) adjoin(g);
    bool grew = true;
    while (grew && space.rank() < A.dim()) {
        grew = false;
        std::size_t frozen = pool.size();
        for (std::size_t i = 0; i < frozen; ++i) {
            for (std::size_t j = 0; j < frozen; ++j) {
                if (adjoin(pool[i] * pool[j])) grew = true;
                if (space.rank() == A.dim()) return space.rank();
            }
        }
    }
    return space.rank();
}

} // namespace

VerificationReport verify_cellularity(const AlgebraTable& A, const std::vector<Element>& generators) {
    VerificationReport rep;
    rep.name = "cellularity";
    const CellDatum& D = A.datum();
    Eigen::Index n = A.dim();

    Eigen::Index reached = span_closure_rank(A, generators);
    if (reached != n)
        rep.fail("generators span only " + std::to_string(reached) + " of " + std::to_string(n) + " dimensions");

    // (C2): involution swaps the member indices of each cellular basis element.
    for (Eigen::Index idx = 0; idx < n; ++idx) {
        CellDatum::BasisKey k = D.basis_key(idx);
        VectorXq image = A.involute(A.cell_to_comp().col(idx));
        VectorXq expected = A.cell_to_comp().col(D.basis_index(k.cell, k.t, k.s));
        if (!exact_equal(VectorXq(image), VectorXq(expected))) {
            rep.fail("involution does not map " + D.basis_label(idx) + " to its transpose");
            if (rep.failures.size() >= 8) break;
        }
    }

    // (C3): for every basis element a and cellular C_{S,T}, the product
    // expands within column T of the same cell plus terms in cells strictly
    // below; the in-cell coefficients must not depend on T.
    for (Eigen::Index a = 0; a < n; ++a) {
        Element ea = Element::unit(A, a);
        for (int cell = 0; cell < D.cell_count(); ++cell) {
            int sz = static_cast<int>(D.cell(cell).members.size());
            for (int s = 0; s < sz; ++s) {
                std::vector<Rational> reference;
                int referenceT = -1;
                for (int t = 0; t < sz; ++t) {
                    Element c{&A, VectorXq(A.cell_to_comp().col(D.basis_index(cell, s, t)))};
                    VectorXq cc = A.to_cellular((ea * c).coeffs);
                    std::vector<Rational> r(static_cast<std::size_t>(sz), Rational(0));
                    bool shapeOk = true;
                    for (Eigen::Index idx = 0; idx < n; ++idx) {
                        if (cc[idx] == Rational(0)) continue;
                        CellDatum::BasisKey k = D.basis_key(idx);
                        if (k.cell == cell) {
                            if (k.t != t) {
                                rep.fail("C3: " + A.basis_name(a) + " * " + D.basis_label(D.basis_index(cell, s, t)) +
                                         " has an in-cell term outside column T: " + D.basis_label(idx));
                                shapeOk = false;
                            } else {
                                r[static_cast<std::size_t>(k.s)] = cc[idx];
                            }
                        } else if (!D.cell_lt(k.cell, cell)) {
                            rep.fail("C3: " + A.basis_name(a) + " * " + D.basis_label(D.basis_index(cell, s, t)) +
                                     " leaks into cell " + D.cell(k.cell).label + " not below " + D.cell(cell).label);
                            shapeOk = false;
                        }
                        if (rep.failures.size() >= 8) return rep;
                    }
                    if (!shapeOk) continue;
                    if (referenceT < 0) {
                        reference = std::move(r);
                        referenceT = t;
                    } else if (r != reference) {
                        rep.fail("C3: coefficients r_a(S',S) depend on T for a=" + A.basis_name(a) + ", cell " +
                                 D.cell(cell).label + ", S=" + D.cell(cell).members[static_cast<std::size_t>(s)] +
                                 " (columns " + std::to_string(referenceT + 1) + " vs " + std::to_string(t + 1) + ")");
                        if (rep.failures.size() >= 8) return rep;
                    }
                }
            }
        }
    }
    return rep;
}

JmVerification verify_jm_axioms(const AlgebraTable& A, const std::vector<Element>& jm,
                                const ContentTable& contents) {
    JmVerification out;
    VerificationReport& rep = out.report;
    rep.name = "jm-axioms";
    const CellDatum& D = A.datum();

    if (contents.jm_count() != static_cast<int>(jm.size()))
        throw std::invalid_argument("verify_jm_axioms: content table width mismatch");
    if (contents.member_count() != D.member_count())
        throw std::invalid_argument("verify_jm_axioms: content table height mismatch");

    for (std::size_t i = 0; i < jm.size(); ++i)
        for (std::size_t j = i + 1; j < jm.size(); ++j)
            if (!(jm[i] * jm[j] == jm[j] * jm[i])) {
                rep.fail("L_" + std::to_string(i + 1) + " and L_" + std::to_string(j + 1) + " do not commute");
                if (rep.failures.size() >= 8) break;
            }

    for (std::size_t i = 0; i < jm.size(); ++i)
        if (!(jm[i].involute() == jm[i]))
            rep.fail("L_" + std::to_string(i + 1) + " is not fixed by the involution");

    // Right action: C_{S,T} L_i = c_T(i) C_{S,T} + in-cell terms C_{S,V} +
    // remainder in cells strictly below. Off-diagonal V are collected and the
    // consistent direction relative to the stored member order is reported.
    long lower = 0, upper = 0;
    for (int cell = 0; cell < D.cell_count(); ++cell) {
        int sz = static_cast<int>(D.cell(cell).members.size());
        for (int s = 0; s < sz; ++s) {
            for (int t = 0; t < sz; ++t) {
                Element c{&A, VectorXq(A.cell_to_comp().col(D.basis_index(cell, s, t)))};
                for (std::size_t i = 0; i < jm.size(); ++i) {
                    VectorXq cc = A.to_cellular((c * jm[i]).coeffs);
                    TriangularExpansion split;
                    split.below_cell_part = VectorXq::Zero(A.dim());
                    bool ok = true;
                    for (Eigen::Index idx = 0; idx < A.dim() && ok; ++idx) {
                        if (cc[idx] == Rational(0)) continue;
                        CellDatum::BasisKey k = D.basis_key(idx);
                        if (k.cell == cell) {
                            if (k.s != s) {
                                rep.fail("JM action moves the row index: " +
                                         D.basis_label(D.basis_index(cell, s, t)) + " * L_" + std::to_string(i + 1));
                                ok = false;
                            } else if (k.t == t) {
                                split.diagonal = cc[idx];
                            } else {
                                split.lower_terms[k.t] = cc[idx];
                            }
                        } else if (D.cell_lt(k.cell, cell)) {
                            split.below_cell_part += cc[idx] * A.cell_to_comp().col(idx);
                        } else {
                            rep.fail("JM action leaks into cell " + D.cell(k.cell).label + " not below " +
                                     D.cell(cell).label);
                            ok = false;
                        }
                    }
                    if (!ok) {
                        if (rep.failures.size() >= 8) return out;
                        continue;
                    }
                    const Rational& expected = contents.content(D.global_member(cell, t), static_cast<int>(i + 1));
                    if (!(split.diagonal == expected))
                        rep.fail("diagonal coefficient of " + D.basis_label(D.basis_index(cell, s, t)) + " * L_" +
                                 std::to_string(i + 1) + " is " + split.diagonal.str() + ", content table says " +
                                 expected.str());
                    for (const auto& [v, coeff] : split.lower_terms) {
                        (void)coeff;
                        bool vLeqT = D.member_leq(cell, v, t);
                        bool tLeqV = D.member_leq(cell, t, v);
                        if (vLeqT && v != t)
                            ++lower;
                        else if (tLeqV && v != t)
                            ++upper;
                        else
                            rep.fail("JM off-diagonal term hits a member incomparable to T in cell " +
                                     D.cell(cell).label);
                    }
                    if (rep.failures.size() >= 8) return out;
                }
            }
        }
    }
    if (lower > 0 && upper > 0) rep.fail("JM action mixes both triangular directions");
    out.orientation = (lower == 0 && upper == 0) ? "diagonal" : (upper == 0 ? "lower-triangular" : "upper-triangular");
    return out;
}

SeparationCheck verify_separation(const ContentTable& contents, const CellDatum& datum) {
    SeparationCheck out;
    bool anyComparable = false;
    int total = datum.member_count();
    for (int g1 = 0; g1 < total; ++g1) {
        auto [c1, s1] = datum.member_of(g1);
        for (int g2 = g1 + 1; g2 < total; ++g2) {
            auto [c2, s2] = datum.member_of(g2);
            bool comparable = (c1 == c2) ? (datum.member_leq(c1, s1, s2) || datum.member_leq(c1, s2, s1))
                                         : (datum.cell_leq(c1, c2) || datum.cell_leq(c2, c1));
            if (!comparable) continue;
            anyComparable = true;
            if (contents.sequence(g1) == contents.sequence(g2)) {
                out.pass = false;
                out.witness = datum.member_label(g1) + " and " + datum.member_label(g2) +
                              " are comparable with identical content sequences";
                return out;
            }
        }
    }
    out.vacuous = !anyComparable;
    return out;
}

} // namespace cjm
