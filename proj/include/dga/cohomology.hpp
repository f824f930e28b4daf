#pragma once

#include <map>
#include <string>
#include <vector>

#include "dga/gca.hpp"

namespace dga {

// One degree slice of a cohomology computation: the cocycle and coboundary
// subspaces of C^n and canonical class representatives (echelon complement of
// im d inside ker d under the monomial order).
struct DegreeCohomology {
    int degree = 0;
    Subspace cocycles;     // ker d within C^degree
    Subspace coboundaries; // im d within C^degree
    Mat representatives;   // one row per class, coordinates in basis(degree)

    Index dim() const { return representatives.rows(); }
};

// Degreewise cohomology table for degrees 0..top_degree(). The top reported
// degree is cutoff-1: the image of d out of the cutoff slice is not known, so
// the cutoff degree itself is never reported.
class CohomologyTable {
  public:
    CohomologyTable() = default;
    CohomologyTable(std::vector<DegreeCohomology> slices) : slices_(std::move(slices)) {}

    int top_degree() const { return static_cast<int>(slices_.size()) - 1; }
    const DegreeCohomology& at(int n) const;
    Index dim(int n) const { return at(n).dim(); }
    std::vector<Index> dims() const;

    // Class of a cocycle in the representative basis of its degree; throws
    // InputError if the polynomial is not a cocycle of a reported degree.
    RowVec class_coordinates(const AlgebraPresentation& pres, const Polynomial& z) const;
    RowVec class_coordinates(const RowVec& z, int degree) const;

    std::vector<Polynomial> representative_polys(const AlgebraPresentation& pres, int n) const;

  private:
    std::vector<DegreeCohomology> slices_;
};

// which: 0 = full differential, 1 = holomorphic part, 2 = antiholomorphic part.
CohomologyTable cohomology(const AlgebraPresentation& a, int which = 0);

// One bidegree slot of an antiholomorphic-differential cohomology table.
struct BidegreeCohomology {
    int p = 0, q = 0;
    Subspace cocycles;     // within the (p,q) coordinate slice of C^{p+q}
    Subspace coboundaries; // image of the (p,q-1) slice
    Mat representatives;   // rows are coordinates in basis(p+q)

    Index dim() const { return representatives.rows(); }
};

// Cohomology of the antiholomorphic differential indexed by bidegree, for
// presentations whose grading kind gives dbar a meaning. Slots cover every
// bidegree realized by monomials of total degree <= cutoff-1.
class BigradedCohomologyTable {
  public:
    BigradedCohomologyTable() = default;
    BigradedCohomologyTable(std::map<std::pair<int, int>, BidegreeCohomology> slots)
        : slots_(std::move(slots)) {}

    const std::map<std::pair<int, int>, BidegreeCohomology>& slots() const { return slots_; }
    Index dim(int p, int q) const; // 0 for absent slots

  private:
    std::map<std::pair<int, int>, BidegreeCohomology> slots_;
};

BigradedCohomologyTable dolbeault_cohomology(const AlgebraPresentation& a);

// Structural equality of presentations: same field, kind, cutoff, generator
// data (in canonical order), and differentials.
bool structurally_equal(const AlgebraPresentation& a, const AlgebraPresentation& b);

// A multiplicative degree-preserving map between presentations determined by
// generator images, commuting with the differentials.
class DgaMorphism {
  public:
    DgaMorphism(AlgebraPresentation source, AlgebraPresentation target,
                std::vector<Polynomial> images);
    static DgaMorphism identity(const AlgebraPresentation& a);

    const AlgebraPresentation& source() const { return source_; }
    const AlgebraPresentation& target() const { return target_; }
    const Polynomial& image(int generator) const {
        return images_[static_cast<size_t>(generator)];
    }

    // Degree and differential compatibility on every generator; bidegree
    // compatibility when both sides carry bidegrees. Throws InputError.
    void validate() const;

    Polynomial apply(const Polynomial& p) const;

    // Matrix of the induced linear map on degree-n slices; rows indexed by
    // source basis(n), columns by target basis(n).
    Mat matrix(int n) const;

  private:
    AlgebraPresentation source_;
    AlgebraPresentation target_;
    std::vector<Polynomial> images_;
};

// Composition g after f (f applied first); presentations must line up.
DgaMorphism compose(const DgaMorphism& g, const DgaMorphism& f);

// Outcome of a quasi-isomorphism check, with a witness on failure: the first
// failing degree together with a source class killed by the map (kernel) or a
// target class missed by it (cokernel).
struct QuasiIsoReport {
    bool ok = false;
    int checked_up_to = -1;
    int failure_degree = -1;
    enum class Failure { None, Kernel, Cokernel } failure = Failure::None;
    Polynomial witness;
    std::string witness_text;
};

// True iff f induces isomorphisms H^j(source) -> H^j(target) for j <= up_to.
QuasiIsoReport is_quasi_isomorphism(const DgaMorphism& f, int up_to);

// True iff f induces isomorphisms for j <= k and an injection in degree k+1.
bool is_k_quasi_isomorphism(const DgaMorphism& f, int k);

// Comparison of dim H^n(a tensor b) against the convolution of the factors'
// cohomology dimensions, degree by degree.
struct KunnethReport {
    std::vector<Index> product_dims;     // dim H^n(a (x) b)
    std::vector<Index> convolution_dims; // sum_i dim H^i(a) * dim H^{n-i}(b)
    bool ok = false;
};

KunnethReport kunneth_check(const AlgebraPresentation& a, const AlgebraPresentation& b);

} // namespace dga
