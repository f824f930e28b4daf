#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dga/linalg.hpp"

namespace dga {

// A linear subspace of coordinate space Scalar^ambient, stored as a canonical
// reduced-row-echelon basis (one basis vector per row). Two Subspace values
// are equal as subspaces iff their stored matrices are identical.
class Subspace {
  public:
    Subspace() : ambient_(0) {}
    explicit Subspace(Index ambient);          // zero subspace
    static Subspace full(Index ambient);       // whole coordinate space
    static Subspace span_of_rows(const Mat& rows);
    static Subspace span_of_rows(const Mat& rows, Index ambient); // rows may be empty

    Index ambient() const { return ambient_; }
    Index dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    const std::vector<Index>& pivot_columns() const { return pivots_; }

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    // Residual of v after elimination against the basis; zero iff v is a member.
    RowVec reduce(const RowVec& v) const;
    bool contains(const RowVec& v) const;
    bool contains(const Subspace& other) const;

    // Coordinates of a member vector in the stored basis; nullopt otherwise.
    std::optional<RowVec> coordinates(const RowVec& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    // Rows extending `smaller` (required to be contained in *this) to a basis
    // of *this; the representatives of the quotient *this / smaller.
    Mat quotient_basis(const Subspace& smaller) const;

    // Entry-wise complex conjugate of the subspace.
    Subspace conjugated() const;

    // Image of the subspace under x -> x * m (rows act on the right).
    Subspace map_rows(const Mat& m) const;

    // Preimage {x : x * m lies in *this} as a subspace of Scalar^{m.rows()}.
    Subspace preimage_rows(const Mat& m) const;

  private:
    Index ambient_;
    Mat basis_; // dim x ambient, canonical RREF
    std::vector<Index> pivots_;
};

// Kernel of the row-action map x -> x * m, a subspace of Scalar^{m.rows()}.
Subspace row_kernel(const Mat& m);

// Row space of m.
Subspace row_space(const Mat& m);

} // namespace dga
