#pragma once

#include <optional>
#include <vector>

#include "dga/scalar.hpp"

namespace dga {

// Exact elimination over a field scalar. All routines produce the canonical
// reduced row echelon form: leftmost pivots, leading coefficient 1, zeros
// above and below each pivot, zero rows dropped. Canonicality makes equality
// of row spaces a syntactic matrix comparison.

template <class Derived>
bool matrix_is_zero(const Eigen::MatrixBase<Derived>& m) {
    using S = typename Derived::Scalar;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (!(m(i, j) == S(0))) return false;
    return true;
}

template <class S>
struct EchelonForm {
    DenseMatrix<S> reduced;           // canonical RREF, zero rows dropped
    std::vector<Index> pivot_columns; // strictly increasing, one per row
};

template <class S>
EchelonForm<S> row_reduce(DenseMatrix<S> m) {
    const Index rows = m.rows(), cols = m.cols();
    std::vector<Index> pivots;
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index pivot = -1;
        for (Index i = r; i < rows; ++i) {
            if (!(m(i, c) == S(0))) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) m.row(pivot).swap(m.row(r));
        S lead = m(r, c);
        if (!(lead == S(1))) {
            S inv = S(1) / lead;
            for (Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
        }
        for (Index i = 0; i < rows; ++i) {
            if (i == r) continue;
            S f = m(i, c);
            if (f == S(0)) continue;
            for (Index j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    EchelonForm<S> out;
    out.reduced = m.topRows(r);
    out.pivot_columns = std::move(pivots);
    return out;
}

template <class S>
Index rank(const DenseMatrix<S>& m) {
    return row_reduce(m).reduced.rows();
}

// Right null space of m (solutions of m*x = 0), returned with basis vectors
// as rows in canonical RREF.
template <class S>
DenseMatrix<S> kernel_basis(const DenseMatrix<S>& m) {
    const Index cols = m.cols();
    EchelonForm<S> e = row_reduce(m);
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (Index c : e.pivot_columns) is_pivot[static_cast<size_t>(c)] = true;
    const Index dim = cols - static_cast<Index>(e.pivot_columns.size());
    DenseMatrix<S> basis(dim, cols);
    basis.setZero();
    Index row = 0;
    for (Index c = 0; c < cols; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        basis(row, c) = S(1);
        for (Index i = 0; i < static_cast<Index>(e.pivot_columns.size()); ++i) {
            basis(row, e.pivot_columns[i]) = -e.reduced(i, c);
        }
        ++row;
    }
    return row_reduce(std::move(basis)).reduced;
}

// One solution of A*x = b, or nullopt if inconsistent.
template <class S>
std::optional<DenseVector<S>> solve_linear(const DenseMatrix<S>& a, const DenseVector<S>& b) {
    const Index rows = a.rows(), cols = a.cols();
    DenseMatrix<S> aug(rows, cols + 1);
    aug.leftCols(cols) = a;
    aug.col(cols) = b;
    EchelonForm<S> e = row_reduce(std::move(aug));
    DenseVector<S> x(cols);
    x.setZero();
    for (Index i = 0; i < e.reduced.rows(); ++i) {
        Index p = e.pivot_columns[static_cast<size_t>(i)];
        if (p == cols) return std::nullopt; // pivot in the augmented column
        x(p) = e.reduced(i, cols);
    }
    return x;
}

} // namespace dga
