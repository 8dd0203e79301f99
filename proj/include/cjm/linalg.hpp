#pragma once

#include "cjm/rational.hpp"

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <vector>

// Exact dense linear algebra over an arbitrary field scalar. Everything here
// is plain Gaussian elimination with exact equality tests; pivots are chosen
// deterministically (first nonzero), so all outputs are reproducible.

namespace cjm {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXq = DenseMatrix<Rational>;
using VectorXq = DenseVector<Rational>;

template <typename Scalar>
bool exact_equal(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

template <typename Scalar>
bool exact_equal(const DenseVector<Scalar>& a, const DenseVector<Scalar>& b) {
    if (a.rows() != b.rows()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

template <typename Scalar>
bool is_exactly_zero(const DenseVector<Scalar>& v) {
    for (Eigen::Index i = 0; i < v.rows(); ++i)
        if (!(v[i] == Scalar(0))) return false;
    return true;
}

// In-place reduced row echelon form; returns the pivot column indices.
template <typename Scalar>
std::vector<Eigen::Index> rref_in_place(DenseMatrix<Scalar>& m) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index p = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r) {
            if (!(m(r, col) == Scalar(0))) {
                p = r;
                break;
            }
        }
        if (p < 0) continue;
        if (p != row) m.row(p).swap(m.row(row));
        Scalar inv = Scalar(1) / m(row, col);
        m.row(row) *= inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            Scalar f = m(r, col);
            if (!(f == Scalar(0))) m.row(r) -= f * m.row(row);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    DenseMatrix<Scalar> work = m;
    return static_cast<Eigen::Index>(rref_in_place(work).size());
}

// Basis of { v : m v = 0 }, in the standard free-column construction.
template <typename Derived>
std::vector<DenseVector<typename Derived::Scalar>> nullspace(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    DenseMatrix<Scalar> work = m;
    std::vector<Eigen::Index> pivots = rref_in_place(work);
    std::vector<bool> is_pivot(work.cols(), false);
    for (Eigen::Index p : pivots) is_pivot[p] = true;
    std::vector<DenseVector<Scalar>> basis;
    for (Eigen::Index f = 0; f < work.cols(); ++f) {
        if (is_pivot[f]) continue;
        DenseVector<Scalar> v = DenseVector<Scalar>::Zero(work.cols());
        v[f] = Scalar(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -work(static_cast<Eigen::Index>(k), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of m x = rhs with free variables set to zero, or nullopt when
// the system is inconsistent.
template <typename DerivedA, typename DerivedB>
std::optional<DenseVector<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& m,
                                                            const Eigen::MatrixBase<DerivedB>& rhs) {
    using Scalar = typename DerivedA::Scalar;
    if (m.rows() != rhs.rows()) throw std::invalid_argument("solve: dimension mismatch");
    DenseMatrix<Scalar> work(m.rows(), m.cols() + 1);
    work.leftCols(m.cols()) = m;
    work.col(m.cols()) = rhs;
    std::vector<Eigen::Index> pivots = rref_in_place(work);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    DenseVector<Scalar> x = DenseVector<Scalar>::Zero(m.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = work(static_cast<Eigen::Index>(k), m.cols());
    return x;
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    DenseMatrix<Scalar> work = m;
    Scalar det(1);
    for (Eigen::Index col = 0; col < work.cols(); ++col) {
        Eigen::Index p = -1;
        for (Eigen::Index r = col; r < work.rows(); ++r) {
            if (!(work(r, col) == Scalar(0))) {
                p = r;
                break;
            }
        }
        if (p < 0) return Scalar(0);
        if (p != col) {
            work.row(p).swap(work.row(col));
            det = -det;
        }
        det *= work(col, col);
        for (Eigen::Index r = col + 1; r < work.rows(); ++r) {
            Scalar f = work(r, col) / work(col, col);
            if (!(f == Scalar(0))) work.row(r) -= f * work.row(col);
        }
    }
    return det;
}

template <typename Derived>
std::optional<DenseMatrix<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    Eigen::Index n = m.rows();
    DenseMatrix<Scalar> work(n, 2 * n);
    work.leftCols(n) = m;
    work.rightCols(n) = DenseMatrix<Scalar>::Identity(n, n);
    std::vector<Eigen::Index> pivots = rref_in_place(work);
    if (static_cast<Eigen::Index>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1)) return std::nullopt;
    return DenseMatrix<Scalar>(work.rightCols(n));
}

// Incrementally maintained row space in reduced echelon form. Used by the
// span-closure computations (algebra generation, symmetric-polynomial span,
// corner dimensions).
template <typename Scalar>
class RowSpace {
public:
    explicit RowSpace(Eigen::Index cols) : cols_(cols) {}

    Eigen::Index cols() const { return cols_; }
    Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }
    const std::vector<DenseVector<Scalar>>& basis() const { return rows_; }

    // Returns true when v enlarged the span.
    bool insert(DenseVector<Scalar> v) {
        check(v);
        reduce(v);
        Eigen::Index lead = leading(v);
        if (lead < 0) return false;
        Scalar inv = Scalar(1) / v[lead];
        v *= inv;
        for (auto& row : rows_) {
            Scalar c = row[lead];
            if (!(c == Scalar(0))) row -= c * v;
        }
        std::size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < lead) ++at;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), lead);
        return true;
    }

    bool contains(DenseVector<Scalar> v) const {
        check(v);
        reduce(v);
        return leading(v) < 0;
    }

private:
    void check(const DenseVector<Scalar>& v) const {
        if (v.rows() != cols_) throw std::invalid_argument("RowSpace: dimension mismatch");
    }
    void reduce(DenseVector<Scalar>& v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            Scalar c = v[pivots_[k]];
            if (!(c == Scalar(0))) v -= c * rows_[k];
        }
    }
    static Eigen::Index leading(const DenseVector<Scalar>& v) {
        for (Eigen::Index i = 0; i < v.rows(); ++i)
            if (!(v[i] == Scalar(0))) return i;
        return -1;
    }

    Eigen::Index cols_;
    std::vector<DenseVector<Scalar>> rows_;
    std::vector<Eigen::Index> pivots_;
};

// True when the two vector lists span the same subspace. Throws on ambient
// dimension mismatch.
template <typename Scalar>
bool subspace_equal(const std::vector<DenseVector<Scalar>>& a, const std::vector<DenseVector<Scalar>>& b) {
    Eigen::Index cols = -1;
    for (const auto& v : a) cols = (cols < 0 ? v.rows() : cols);
    for (const auto& v : b) cols = (cols < 0 ? v.rows() : cols);
    if (cols < 0) return true; // both empty
    RowSpace<Scalar> sa(cols), sb(cols), both(cols);
    for (const auto& v : a) {
        sa.insert(v);
        both.insert(v);
    }
    for (const auto& v : b) {
        sb.insert(v);
        both.insert(v);
    }
    return sa.rank() == sb.rank() && sa.rank() == both.rank();
}

} // namespace cjm
