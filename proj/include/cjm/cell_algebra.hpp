#pragma once

#include "cjm/linalg.hpp"
#include "cjm/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

// Cell data, finite-dimensional algebra tables over Rational coefficients,
// and the verifiers for the cellular axioms, the Jucys-Murphy axioms and the
// separation condition. The poset stored in a CellDatum is the order the
// axioms are checked against literally; builders choose it so that the
// filtration conditions hold (see each builder's notes).

namespace cjm {

struct CellInfo {
    std::string label;
    std::vector<std::string> members;          // labels of M(lambda), enumeration order
    std::vector<std::vector<bool>> member_leq; // member_leq[a][b]: a <= b within the cell
};

class CellDatum {
public:
    CellDatum(std::vector<CellInfo> cells, std::vector<std::vector<bool>> cell_leq,
              std::string order_note = "");

    int cell_count() const { return static_cast<int>(cells_.size()); }
    const CellInfo& cell(int c) const { return cells_[static_cast<std::size_t>(c)]; }
    bool cell_leq(int a, int b) const { return cell_leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    bool cell_lt(int a, int b) const { return a != b && cell_leq(a, b); }
    bool member_leq(int c, int a, int b) const {
        return cells_[static_cast<std::size_t>(c)].member_leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    const std::string& order_note() const { return order_note_; }

    Eigen::Index dim() const { return dim_; } // sum of |M(lambda)|^2

    int member_count() const { return memberTotal_; }
    int member_offset(int cell) const { return memberOffset_[static_cast<std::size_t>(cell)]; }
    int global_member(int cell, int s) const { return member_offset(cell) + s; }
    std::pair<int, int> member_of(int globalIdx) const; // (cell, index within cell)
    std::string member_label(int globalIdx) const;

    Eigen::Index basis_index(int cell, int s, int t) const;
    struct BasisKey {
        int cell = 0, s = 0, t = 0;
    };
    BasisKey basis_key(Eigen::Index idx) const;
    std::string basis_label(Eigen::Index idx) const;

private:
    std::vector<CellInfo> cells_;
    std::vector<std::vector<bool>> cell_leq_;
    std::string order_note_;
    std::vector<int> memberOffset_;
    std::vector<Eigen::Index> basisOffset_;
    int memberTotal_ = 0;
    Eigen::Index dim_ = 0;
};

class AlgebraTable {
public:
    using ProductTerm = std::pair<Eigen::Index, Rational>;
    using ProductRow = std::vector<ProductTerm>;

    // products is row-major: products[i * dim + j] expands basis_i * basis_j.
    // The cellular-to-computational change of basis must be invertible; the
    // inverse is computed here once.
    AlgebraTable(CellDatum datum, std::vector<ProductRow> products, MatrixXq involution,
                 VectorXq identity, MatrixXq cell_to_comp, std::vector<std::string> basis_names);

    Eigen::Index dim() const { return dim_; }
    const CellDatum& datum() const { return datum_; }
    const ProductRow& product(Eigen::Index i, Eigen::Index j) const {
        return products_[static_cast<std::size_t>(i * dim_ + j)];
    }
    VectorXq multiply(const VectorXq& a, const VectorXq& b) const;
    VectorXq involute(const VectorXq& a) const { return involution_ * a; }
    const MatrixXq& involution() const { return involution_; }
    const VectorXq& identity_coeffs() const { return identity_; }
    const MatrixXq& cell_to_comp() const { return cellToComp_; }
    const MatrixXq& comp_to_cell() const { return compToCell_; }
    VectorXq to_cellular(const VectorXq& comp) const { return compToCell_ * comp; }
    VectorXq from_cellular(const VectorXq& cell) const { return cellToComp_ * cell; }
    const std::string& basis_name(Eigen::Index i) const { return basisNames_[static_cast<std::size_t>(i)]; }

private:
    CellDatum datum_;
    Eigen::Index dim_;
    std::vector<ProductRow> products_;
    MatrixXq involution_;
    VectorXq identity_;
    MatrixXq cellToComp_;
    MatrixXq compToCell_;
    std::vector<std::string> basisNames_;
};

struct Element {
    const AlgebraTable* alg = nullptr;
    VectorXq coeffs;

    static Element zero(const AlgebraTable& a) { return {&a, VectorXq::Zero(a.dim())}; }
    static Element unit(const AlgebraTable& a, Eigen::Index i);
    static Element identity(const AlgebraTable& a) { return {&a, a.identity_coeffs()}; }

    bool is_zero() const { return is_exactly_zero(coeffs); }
    Element involute() const { return {alg, alg->involute(coeffs)}; }

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const; // throws on algebra mismatch
    Element operator*(const Rational& c) const { return {alg, VectorXq(coeffs * c)}; }
    Element operator-() const { return {alg, VectorXq(-coeffs)}; }

    friend Element operator*(const Rational& c, const Element& e) { return e * c; }
    friend bool operator==(const Element& a, const Element& b) {
        return a.alg == b.alg && exact_equal(a.coeffs, b.coeffs);
    }
};

// Contents c_T(i) for every member T of M(Lambda) (global, cell-major order)
// and JM index i = 1..jm_count, plus the content sets C(i).
class ContentTable {
public:
    explicit ContentTable(MatrixXq content_of);

    int member_count() const { return static_cast<int>(contentOf_.rows()); }
    int jm_count() const { return static_cast<int>(contentOf_.cols()); }
    const Rational& content(int member, int i) const { // i is 1-based
        return contentOf_(member, i - 1);
    }
    std::vector<Rational> sequence(int member) const;
    const std::vector<Rational>& content_set(int i) const { // sorted ascending
        return contentSets_[static_cast<std::size_t>(i - 1)];
    }

private:
    MatrixXq contentOf_;
    std::vector<std::vector<Rational>> contentSets_;
};

// Split of C_{S,T} * L_i produced by the JM verifier: the diagonal
// coefficient, the same-row in-cell terms keyed by member index V, and the
// remainder supported on cells strictly below.
struct TriangularExpansion {
    Rational diagonal;
    std::map<int, Rational> lower_terms;
    VectorXq below_cell_part;
};

struct VerificationReport {
    std::string name;
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void fail(std::string what) {
        pass = false;
        failures.push_back(std::move(what));
    }
    void note(std::string what) { notes.push_back(std::move(what)); }
};

// Structural invariants of the table itself: two-sided identity,
// associativity (exhaustive for dim <= 36, deterministic sampling above),
// involution is an order-2 anti-automorphism.
VerificationReport verify_algebra_structure(const AlgebraTable& A);

// (C1) the cellular basis is a basis (change of matrix invertible, checked at
// construction), (C2) the involution maps C_{S,T} to C_{T,S}, (C3) left
// multiplication is triangular with coefficients independent of T. The
// generating property of `generators` is checked by span closure; (C3) is
// then verified against every computational basis element.
VerificationReport verify_cellularity(const AlgebraTable& A, const std::vector<Element>& generators);

struct JmVerification {
    VerificationReport report;
    // "diagonal", "lower-triangular" or "upper-triangular", relative to the
    // member order stored in the datum; empirically determined.
    std::string orientation = "diagonal";
};

JmVerification verify_jm_axioms(const AlgebraTable& A, const std::vector<Element>& jm,
                                const ContentTable& contents);

struct SeparationCheck {
    bool pass = true;
    bool vacuous = false; // no comparable pairs existed
    std::string witness;  // offending pair when pass == false
};

SeparationCheck verify_separation(const ContentTable& contents, const CellDatum& datum);

} // namespace cjm
