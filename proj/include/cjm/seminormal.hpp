#pragma once

#include "cjm/cell_algebra.hpp"

#include <string>
#include <vector>

// Interpolation idempotents F_T built from the JM elements, the projected
// basis f_{S,T} = F_S C_{S,T} F_T with its structure scalars gamma_T, and the
// central idempotents F_lambda. The construction needs every pair of members
// across the whole datum to carry distinct content sequences; that gate is
// computed here and reported rather than assumed (the comparable-pairs
// separation condition alone leaves antichain cells with identical contents,
// for which the interpolation products collapse).

namespace cjm {

struct SeminormalGate {
    bool applicable = true;
    std::string reason; // offending pair when not applicable
};

SeminormalGate seminormal_applicable(const ContentTable& contents, const CellDatum& datum);

struct SeminormalSystem {
    std::vector<Element> FT;      // indexed by global member
    std::vector<Element> fBasis;  // indexed like the cellular basis, cell-major (s, t)
    std::vector<Rational> gamma;  // indexed by global member
    std::vector<Element> Flambda; // indexed by cell
    // Defects found while assembling (gamma extraction impossible, wrong
    // cellular leading coefficient); verify_seminormal_theorems recomputes
    // all of these as report entries.
    std::vector<std::string> constructionFailures;
};

// Product over i and over c in C(i) \ {c_T(i)} of (L_i - c)/(c_T(i) - c),
// factors ordered by ascending i then ascending c. The factors commute, so
// the order does not affect the value.
Element compute_FT(const AlgebraTable& A, const std::vector<Element>& jm, const ContentTable& contents,
                   int globalMember);

SeminormalSystem build_seminormal(const AlgebraTable& A, const std::vector<Element>& jm,
                                  const ContentTable& contents);

// Asserts, exactly: the F_T are orthogonal idempotents summing to the
// identity with one-dimensional corners F_T A F_T; the f_{S,T} form a basis
// with leading cellular coefficient 1; every gamma_T is nonzero and
// independent of the auxiliary row S; each F_lambda is central, acts as the
// identity on its own cell's f elements and as zero on the others; and
// L_i = sum over T of c_T(i) F_T. On small instances the full multiplication
// rule f_{S,T} f_{U,V} = [T = U] gamma_T f_{S,V} is checked on all pairs.
VerificationReport verify_seminormal_theorems(const AlgebraTable& A, const std::vector<Element>& jm,
                                              const ContentTable& contents, const SeminormalSystem& sys);

} // namespace cjm
