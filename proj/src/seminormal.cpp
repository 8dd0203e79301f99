#include "cjm/seminormal.hpp"

#include <stdexcept>

namespace cjm {

SeminormalGate seminormal_applicable(const ContentTable& contents, const CellDatum& datum) {
    SeminormalGate gate;
    int total = datum.member_count();
    for (int a = 0; a < total; ++a) {
        for (int b = a + 1; b < total; ++b) {
            if (contents.sequence(a) == contents.sequence(b)) {
                gate.applicable = false;
                gate.reason = "content sequences of " + datum.member_label(a) + " and " +
                              datum.member_label(b) + " coincide";
                return gate;
            }
        }
    }
    return gate;
}

Element compute_FT(const AlgebraTable& A, const std::vector<Element>& jm, const ContentTable& contents,
                   int globalMember) {
    Element acc = Element::identity(A);
    for (int i = 1; i <= contents.jm_count(); ++i) {
        const Rational& cT = contents.content(globalMember, i);
        for (const Rational& c : contents.content_set(i)) {
            if (c == cT) continue;
            Rational den = cT - c;
            if (den.is_zero()) throw std::domain_error("compute_FT: repeated content in C(i)");
            acc = acc * ((jm[static_cast<std::size_t>(i - 1)] - Element::identity(A) * c) * den.inverse());
        }
    }
    return acc;
}

namespace {

// gamma_T from f_{S,T} f_{T,S} = gamma_T f_{S,S}; nullopt when the product is
// not proportional to f_{S,S} (or f_{S,S} = 0), which the caller reports.
std::optional<Rational> extract_gamma(const Element& fST, const Element& fTS, const Element& fSS) {
    Element prod = fST * fTS;
    Eigen::Index lead = -1;
    for (Eigen::Index i = 0; i < fSS.coeffs.rows(); ++i) {
        if (!(fSS.coeffs[i] == Rational(0))) {
            lead = i;
            break;
        }
    }
    if (lead < 0) return std::nullopt;
    Rational gamma = prod.coeffs[lead] / fSS.coeffs[lead];
    if (!(prod == fSS * gamma)) return std::nullopt;
    return gamma;
}

} // namespace

SeminormalSystem build_seminormal(const AlgebraTable& A, const std::vector<Element>& jm,
                                  const ContentTable& contents) {
    const CellDatum& D = A.datum();
    SeminormalSystem sys;

    for (int g = 0; g < D.member_count(); ++g) sys.FT.push_back(compute_FT(A, jm, contents, g));

    sys.fBasis.resize(static_cast<std::size_t>(A.dim()), Element::zero(A));
    for (int cell = 0; cell < D.cell_count(); ++cell) {
        int sz = static_cast<int>(D.cell(cell).members.size());
        for (int s = 0; s < sz; ++s) {
            for (int t = 0; t < sz; ++t) {
                Eigen::Index idx = D.basis_index(cell, s, t);
                Element cst{&A, VectorXq(A.cell_to_comp().col(idx))};
                Element f = sys.FT[static_cast<std::size_t>(D.global_member(cell, s))] * cst *
                            sys.FT[static_cast<std::size_t>(D.global_member(cell, t))];
                Rational leading = A.to_cellular(f.coeffs)[idx];
                if (!(leading == Rational(1)))
                    sys.constructionFailures.push_back("coefficient of " + D.basis_label(idx) + " in f is " +
                                                       leading.str() + ", expected 1");
                sys.fBasis[static_cast<std::size_t>(idx)] = std::move(f);
            }
        }
    }

    sys.gamma.resize(static_cast<std::size_t>(D.member_count()), Rational(0));
    for (int cell = 0; cell < D.cell_count(); ++cell) {
        int sz = static_cast<int>(D.cell(cell).members.size());
        for (int t = 0; t < sz; ++t) {
            std::optional<Rational> value;
            bool consistent = true;
            for (int s = 0; s < sz; ++s) {
                auto g = extract_gamma(sys.fBasis[static_cast<std::size_t>(D.basis_index(cell, s, t))],
                                       sys.fBasis[static_cast<std::size_t>(D.basis_index(cell, t, s))],
                                       sys.fBasis[static_cast<std::size_t>(D.basis_index(cell, s, s))]);
                if (!g) {
                    consistent = false;
                    break;
                }
                if (!value)
                    value = *g;
                else if (!(*value == *g))
                    consistent = false;
            }
            int global = D.global_member(cell, t);
            if (!consistent || !value) {
                sys.constructionFailures.push_back("gamma extraction failed for " + D.member_label(global));
            } else {
                sys.gamma[static_cast<std::size_t>(global)] = *value;
            }
        }
    }

    for (int cell = 0; cell < D.cell_count(); ++cell) {
        Element sum = Element::zero(A);
        int sz = static_cast<int>(D.cell(cell).members.size());
        for (int t = 0; t < sz; ++t) sum = sum + sys.FT[static_cast<std::size_t>(D.global_member(cell, t))];
        sys.Flambda.push_back(std::move(sum));
    }
    return sys;
}

VerificationReport verify_seminormal_theorems(const AlgebraTable& A, const std::vector<Element>& jm,
                                              const ContentTable& contents, const SeminormalSystem& sys) {
    VerificationReport rep;
    rep.name = "seminormal";
    const CellDatum& D = A.datum();
    const int total = D.member_count();
    const Eigen::Index dim = A.dim();
    auto capped = [&rep] { return rep.failures.size() >= 12; };

    for (int t = 0; t < total && !capped(); ++t) {
        const Element& F = sys.FT[static_cast<std::size_t>(t)];
        if (!(F * F == F)) rep.fail("F_T not idempotent for T = " + D.member_label(t));
    }
    for (int t = 0; t < total && !capped(); ++t)
        for (int u = 0; u < total && !capped(); ++u) {
            if (t == u) continue;
            Element prod = sys.FT[static_cast<std::size_t>(t)] * sys.FT[static_cast<std::size_t>(u)];
            if (!prod.is_zero())
                rep.fail("F_T F_U nonzero for T = " + D.member_label(t) + ", U = " + D.member_label(u));
        }

    {
        Element sum = Element::zero(A);
        for (const auto& F : sys.FT) sum = sum + F;
        if (!(sum == Element::identity(A))) rep.fail("sum of all F_T differs from the identity");
    }

    for (std::size_t i = 0; i < jm.size() && !capped(); ++i) {
        Element expected = Element::zero(A);
        for (int t = 0; t < total; ++t)
            expected = expected + sys.FT[static_cast<std::size_t>(t)] * contents.content(t, static_cast<int>(i + 1));
        if (!(expected == jm[i]))
            rep.fail("L_" + std::to_string(i + 1) + " differs from its F_T spectral expansion");
    }

    {
        MatrixXq fMatrix(dim, dim);
        for (Eigen::Index idx = 0; idx < dim; ++idx) fMatrix.col(idx) = sys.fBasis[static_cast<std::size_t>(idx)].coeffs;
        Eigen::Index r = rank(fMatrix);
        if (r != dim)
            rep.fail("projected basis has rank " + std::to_string(r) + " of " + std::to_string(dim));
    }

    for (Eigen::Index idx = 0; idx < dim && !capped(); ++idx) {
        Rational leading = A.to_cellular(sys.fBasis[static_cast<std::size_t>(idx)].coeffs)[idx];
        if (!(leading == Rational(1)))
            rep.fail("leading cellular coefficient of f at " + D.basis_label(idx) + " is " + leading.str());
    }

    // gamma: recomputed over every auxiliary S, nonzero, and matching the
    // stored values.
    for (int cell = 0; cell < D.cell_count() && !capped(); ++cell) {
        int sz = static_cast<int>(D.cell(cell).members.size());
        for (int t = 0; t < sz && !capped(); ++t) {
            int global = D.global_member(cell, t);
            const Rational& stored = sys.gamma[static_cast<std::size_t>(global)];
            if (stored.is_zero()) {
                rep.fail("gamma is zero for T = " + D.member_label(global));
                continue;
            }
            for (int s = 0; s < sz; ++s) {
                auto g = extract_gamma(sys.fBasis[static_cast<std::size_t>(D.basis_index(cell, s, t))],
                                       sys.fBasis[static_cast<std::size_t>(D.basis_index(cell, t, s))],
                                       sys.fBasis[static_cast<std::size_t>(D.basis_index(cell, s, s))]);
                if (!g || !(*g == stored)) {
                    rep.fail("gamma for T = " + D.member_label(global) + " is not independent of S");
                    break;
                }
            }
        }
    }

    for (int cell = 0; cell < D.cell_count() && !capped(); ++cell) {
        const Element& F = sys.Flambda[static_cast<std::size_t>(cell)];
        for (Eigen::Index j = 0; j < dim; ++j) {
            Element b = Element::unit(A, j);
            if (!(F * b == b * F)) {
                rep.fail("F_lambda for cell " + D.cell(cell).label + " does not commute with " + A.basis_name(j));
                break;
            }
        }
    }

    // Primitivity via the corner dimension.
    for (int t = 0; t < total && !capped(); ++t) {
        const Element& F = sys.FT[static_cast<std::size_t>(t)];
        RowSpace<Rational> corner(dim);
        for (Eigen::Index j = 0; j < dim; ++j) corner.insert((F * Element::unit(A, j) * F).coeffs);
        if (corner.rank() != 1)
            rep.fail("corner dimension for T = " + D.member_label(t) + " is " + std::to_string(corner.rank()));
    }

    // F_lambda restricted to the projected basis: identity on its own cell,
    // zero elsewhere; and the F_lambda are independent.
    for (int cell = 0; cell < D.cell_count() && !capped(); ++cell) {
        const Element& F = sys.Flambda[static_cast<std::size_t>(cell)];
        for (Eigen::Index idx = 0; idx < dim && !capped(); ++idx) {
            const Element& f = sys.fBasis[static_cast<std::size_t>(idx)];
            Element img = F * f;
            bool same = D.basis_key(idx).cell == cell;
            if (same && !(img == f))
                rep.fail("F_lambda of " + D.cell(cell).label + " does not fix " + D.basis_label(idx));
            if (!same && !img.is_zero())
                rep.fail("F_lambda of " + D.cell(cell).label + " does not kill " + D.basis_label(idx));
        }
    }
    {
        MatrixXq stacked(dim, D.cell_count());
        for (int cell = 0; cell < D.cell_count(); ++cell)
            stacked.col(cell) = sys.Flambda[static_cast<std::size_t>(cell)].coeffs;
        if (rank(stacked) != D.cell_count()) rep.fail("the F_lambda are linearly dependent");
    }

    // Full multiplication rule on small instances.
    if (dim <= 60) {
        for (Eigen::Index a = 0; a < dim && !capped(); ++a) {
            CellDatum::BasisKey ka = D.basis_key(a);
            for (Eigen::Index b = 0; b < dim && !capped(); ++b) {
                CellDatum::BasisKey kb = D.basis_key(b);
                Element prod = sys.fBasis[static_cast<std::size_t>(a)] * sys.fBasis[static_cast<std::size_t>(b)];
                if (ka.cell == kb.cell && ka.t == kb.s) {
                    int global = D.global_member(ka.cell, ka.t);
                    Element expected = sys.fBasis[static_cast<std::size_t>(D.basis_index(ka.cell, ka.s, kb.t))] *
                                       sys.gamma[static_cast<std::size_t>(global)];
                    if (!(prod == expected))
                        rep.fail("multiplication rule fails on " + D.basis_label(a) + " * " + D.basis_label(b));
                } else if (!prod.is_zero()) {
                    rep.fail("expected zero product " + D.basis_label(a) + " * " + D.basis_label(b));
                }
            }
        }
    }

    for (const auto& line : sys.constructionFailures) rep.fail("construction: " + line);
    return rep;
}

} // namespace cjm
