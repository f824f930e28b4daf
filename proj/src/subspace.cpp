#include "dga/subspace.hpp"

#include "dga/errors.hpp"

namespace dga {

Subspace::Subspace(Index ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::full(Index ambient) {
    Subspace s(ambient);
    s.basis_ = Mat::Identity(ambient, ambient);
    s.pivots_.resize(static_cast<size_t>(ambient));
    for (Index i = 0; i < ambient; ++i) s.pivots_[static_cast<size_t>(i)] = i;
    return s;
}

Subspace Subspace::span_of_rows(const Mat& rows) {
    return span_of_rows(rows, rows.cols());
}

Subspace Subspace::span_of_rows(const Mat& rows, Index ambient) {
    if (rows.rows() > 0 && rows.cols() != ambient)
        throw InputError("span_of_rows: ambient dimension mismatch");
    Subspace s(ambient);
    if (rows.rows() == 0) return s;
    EchelonForm<Scalar> e = row_reduce(rows);
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivot_columns);
    return s;
}

bool Subspace::operator==(const Subspace& o) const {
    if (ambient_ != o.ambient_ || dim() != o.dim()) return false;
    return basis_ == o.basis_;
}

RowVec Subspace::reduce(const RowVec& v) const {
    if (v.cols() != ambient_) throw InputError("reduce: ambient dimension mismatch");
    RowVec r = v;
    for (Index i = 0; i < dim(); ++i) {
        Scalar c = r(pivots_[static_cast<size_t>(i)]);
        if (c == Scalar(0)) continue;
        r -= c * basis_.row(i);
    }
    return r;
}

bool Subspace::contains(const RowVec& v) const { return matrix_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (Index i = 0; i < other.dim(); ++i) {
        if (!contains(RowVec(other.basis_.row(i)))) return false;
    }
    return true;
}

std::optional<RowVec> Subspace::coordinates(const RowVec& v) const {
    // RREF basis: each row is 1 at its own pivot and 0 at the other pivots,
    // so member coordinates are read off at the pivot columns.
    RowVec c(dim());
    for (Index i = 0; i < dim(); ++i) c(i) = v(pivots_[static_cast<size_t>(i)]);
    if (dim() == 0) {
        if (matrix_is_zero(v)) return c;
        return std::nullopt;
    }
    if (matrix_is_zero(RowVec(v - c * basis_))) return c;
    return std::nullopt;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw InputError("sum: ambient dimension mismatch");
    Mat stacked(dim() + other.dim(), ambient_);
    stacked.topRows(dim()) = basis_;
    stacked.bottomRows(other.dim()) = other.basis_;
    return span_of_rows(stacked, ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw InputError("intersect: ambient dimension mismatch");
    const Index k = dim(), l = other.dim();
    if (k == 0 || l == 0) return Subspace(ambient_);
    Mat stacked(k + l, ambient_);
    stacked.topRows(k) = basis_;
    stacked.bottomRows(l) = other.basis_;
    Subspace ker = row_kernel(stacked);
    Mat vecs(ker.dim(), ambient_);
    for (Index i = 0; i < ker.dim(); ++i) {
        vecs.row(i) = ker.basis().row(i).leftCols(k) * basis_;
    }
    return span_of_rows(vecs, ambient_);
}

Mat Subspace::quotient_basis(const Subspace& smaller) const {
    if (!contains(smaller)) throw InputError("quotient_basis: not a subspace inclusion");
    Mat residuals(dim(), ambient_);
    Index n = 0;
    for (Index i = 0; i < dim(); ++i) {
        RowVec r = smaller.reduce(RowVec(basis_.row(i)));
        if (!matrix_is_zero(r)) residuals.row(n++) = r;
    }
    EchelonForm<Scalar> e = row_reduce(Mat(residuals.topRows(n)));
    return e.reduced;
}

Subspace Subspace::conjugated() const {
    Mat m = basis_;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) m(i, j) = m(i, j).conj();
    return span_of_rows(m, ambient_);
}

Subspace Subspace::map_rows(const Mat& m) const {
    if (m.rows() != ambient_) throw InputError("map_rows: dimension mismatch");
    if (dim() == 0) return Subspace(m.cols());
    return span_of_rows(Mat(basis_ * m), m.cols());
}

Subspace Subspace::preimage_rows(const Mat& m) const {
    if (m.cols() != ambient_) throw InputError("preimage_rows: dimension mismatch");
    // Residual projection P: y -> y - sum y[p_i] * basis_row_i, as a matrix
    // acting on row vectors from the right; x*m lies in *this iff x*m*P = 0.
    Mat p = Mat::Identity(ambient_, ambient_);
    for (Index i = 0; i < dim(); ++i) {
        p.row(pivots_[static_cast<size_t>(i)]) -= basis_.row(i);
    }
    return row_kernel(Mat(m * p));
}

Subspace row_kernel(const Mat& m) {
    Mat t = m.transpose();
    Mat basis = kernel_basis(t);
    return Subspace::span_of_rows(basis, m.rows());
}

Subspace row_space(const Mat& m) { return Subspace::span_of_rows(m, m.cols()); }

} // namespace dga
