#pragma once

#include "cjm/cell_algebra.hpp"
#include "cjm/sympoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cjm {

// Basis of { z : z b = b z for every basis element b }, the intersection of
// the commutator kernels taken over the whole computational basis.
std::vector<Element> compute_center(const AlgebraTable& A);

// Basis of the span of all symmetric polynomials evaluated at the JM
// elements: the closure of {1, e_1(L), ..., e_m(L)} under products.
std::vector<Element> sym_span(const AlgebraTable& A, const std::vector<Element>& jm);

// Each elementary symmetric polynomial in the JM elements commutes with every
// basis element (and with it the whole symmetric span is central).
VerificationReport verify_prop_sym_central(const AlgebraTable& A, const std::vector<Element>& jm);

// Within each cell, all members carry the same content multiset; a failure is
// witnessed by the power sum whose values differ.
VerificationReport verify_prop_converse(const AlgebraTable& A, const std::vector<Element>& jm,
                                        const ContentTable& contents);

struct Lmjm1Result {
    bool proportional = false;
    std::optional<Rational> k;
};

// The family {1, p_1..p_m, pairwise products}; proportionality across it
// pins k and decides multiset equality.
std::vector<SymPoly> lmjm1_default_family(int m);

// Decides whether one constant k satisfies p(x) = k p(y) for every p in the
// family. Vectors must have equal length.
Lmjm1Result lemma_lmjm1_check(const std::vector<Rational>& x, const std::vector<Rational>& y,
                              const std::vector<SymPoly>& family);

struct Lmjm2Witness {
    std::vector<SymPoly> polys;
    MatrixXq evaluation; // polys down the rows, content vectors across; upper triangular
    Rational det;        // product of the diagonal; equals the pre-elimination determinant
    int degreeBudget = 0;
};

// Greedy search over power-sum products by increasing degree for a family
// whose evaluation matrix at the given content vectors is nonsingular,
// followed by determinant-preserving elimination to upper-triangular form.
// Returns nothing when no nonsingular family exists within the degree budget
// (which happens exactly when two content multisets coincide).
std::optional<Lmjm2Witness> lemma_lmjm2_triangularize(const std::vector<std::vector<Rational>>& contentVectors);

struct CenterReport {
    bool applicable = true; // the symmetric-polynomials-are-central hypothesis
    std::vector<std::string> hypothesisFailures;
    std::vector<Element> centerBasis;
    std::vector<Element> symSpanBasis;
    bool conditionOne = false;      // center equals the symmetric span
    bool conditionTwo = false;      // per-cell content multisets pairwise distinct
    bool equivalenceHolds = false;  // conditionOne == conditionTwo
    std::optional<std::pair<std::string, std::string>> collidingCells; // when conditionTwo fails
    std::optional<Lmjm2Witness> triangularWitness;                     // when conditionTwo holds
    std::vector<std::string> notes;
};

// Evaluates both sides of the equivalence: the subspace test
// center == symmetric span against pairwise distinctness of the per-cell
// content multisets (taken from each cell's first member, which
// verify_prop_converse justifies).
CenterReport main_theorem_check(const AlgebraTable& A, const std::vector<Element>& jm,
                                const ContentTable& contents);

} // namespace cjm
