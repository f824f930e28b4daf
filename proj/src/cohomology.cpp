#include "dga/cohomology.hpp"

#include <algorithm>

#include "dga/errors.hpp"

namespace dga {

const DegreeCohomology& CohomologyTable::at(int n) const {
    if (n < 0 || n > top_degree())
        throw InputError("cohomology degree " + std::to_string(n) +
                         " is outside the reported range [0, " + std::to_string(top_degree()) +
                         "]");
    return slices_[static_cast<size_t>(n)];
}

std::vector<Index> CohomologyTable::dims() const {
    std::vector<Index> out;
    out.reserve(slices_.size());
    for (const auto& s : slices_) out.push_back(s.dim());
    return out;
}

RowVec CohomologyTable::class_coordinates(const AlgebraPresentation& pres,
                                          const Polynomial& z) const {
    if (z.is_zero()) throw InputError("class_coordinates: zero polynomial has every degree");
    int degree = -1;
    if (!pres.is_homogeneous(z, &degree))
        throw InputError("class_coordinates: polynomial is not homogeneous");
    return class_coordinates(pres.to_coords(z, degree), degree);
}

RowVec CohomologyTable::class_coordinates(const RowVec& z, int degree) const {
    const DegreeCohomology& s = at(degree);
    if (!s.cocycles.contains(z)) throw InputError("class_coordinates: not a cocycle");
    // z = x * [representatives; coboundary basis]; the representative block of
    // x is the class.
    const Mat& reps = s.representatives;
    const Mat& bnd = s.coboundaries.basis();
    Mat stacked(reps.rows() + bnd.rows(), z.cols());
    stacked.topRows(reps.rows()) = reps;
    stacked.bottomRows(bnd.rows()) = bnd;
    auto x = solve_linear<Scalar>(stacked.transpose(), z.transpose());
    if (!x) throw InputError("class_coordinates: cocycle outside ker d (internal)");
    RowVec out(reps.rows());
    for (Index i = 0; i < reps.rows(); ++i) out(i) = (*x)(i);
    return out;
}

std::vector<Polynomial> CohomologyTable::representative_polys(const AlgebraPresentation& pres,
                                                              int n) const {
    const DegreeCohomology& s = at(n);
    std::vector<Polynomial> out;
    out.reserve(static_cast<size_t>(s.representatives.rows()));
    for (Index i = 0; i < s.representatives.rows(); ++i)
        out.push_back(pres.from_coords(s.representatives.row(i), n));
    return out;
}

CohomologyTable cohomology(const AlgebraPresentation& a, int which) {
    std::vector<DegreeCohomology> slices;
    const int top = a.cutoff() - 1;
    for (int n = 0; n <= top; ++n) {
        DegreeCohomology s;
        s.degree = n;
        s.cocycles = row_kernel(a.d_matrix(n, which));
        if (n == 0) {
            s.coboundaries = Subspace(a.basis_dim(0));
        } else {
            s.coboundaries = row_space(a.d_matrix(n - 1, which));
        }
        s.representatives = s.cocycles.quotient_basis(s.coboundaries);
        slices.push_back(std::move(s));
    }
    return CohomologyTable(std::move(slices));
}

Index BigradedCohomologyTable::dim(int p, int q) const {
    auto it = slots_.find({p, q});
    return it == slots_.end() ? 0 : it->second.dim();
}

BigradedCohomologyTable dolbeault_cohomology(const AlgebraPresentation& a) {
    if (a.kind() != GradingKind::Bigraded && a.kind() != GradingKind::Dolbeault)
        throw InputError("dolbeault_cohomology needs a bigraded or Dolbeault presentation");
    std::map<std::pair<int, int>, BidegreeCohomology> slots;
    const int top = a.cutoff() - 1;

    auto type_space = [&](int n, int p, int q) -> Subspace {
        if (n < 0) return Subspace(0);
        std::vector<int> pos = a.type_positions(n, p, q);
        Mat rows(static_cast<Index>(pos.size()), a.basis_dim(n));
        rows.setZero();
        for (size_t i = 0; i < pos.size(); ++i)
            rows(static_cast<Index>(i), pos[i]) = Scalar(1);
        return Subspace::span_of_rows(rows, a.basis_dim(n));
    };

    for (int n = 0; n <= top; ++n) {
        // Collect the bidegrees realized in this total degree.
        std::map<std::pair<int, int>, bool> seen;
        for (const Monomial& m : a.basis(n)) seen[a.bidegree_of(m)] = true;
        for (const auto& [pq, unused] : seen) {
            auto [p, q] = pq;
            BidegreeCohomology s;
            s.p = p;
            s.q = q;
            Subspace slice = type_space(n, p, q);
            s.cocycles = slice.intersect(row_kernel(a.d_matrix(n, 2)));
            if (n == 0)
                s.coboundaries = Subspace(a.basis_dim(0));
            else
                s.coboundaries = type_space(n - 1, p, q - 1).map_rows(a.d_matrix(n - 1, 2));
            s.representatives = s.cocycles.quotient_basis(s.coboundaries);
            slots.emplace(pq, std::move(s));
        }
    }
    return BigradedCohomologyTable(std::move(slots));
}

bool structurally_equal(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    if (a.field() != b.field() || a.kind() != b.kind() || a.cutoff() != b.cutoff() ||
        a.generator_count() != b.generator_count())
        return false;
    for (int i = 0; i < a.generator_count(); ++i) {
        const Generator& x = a.generator(i);
        const Generator& y = b.generator(i);
        if (x.name != y.name || x.degree != y.degree || x.has_bidegree != y.has_bidegree ||
            x.p != y.p || x.q != y.q || x.power_cap != y.power_cap ||
            x.conj_name != y.conj_name || x.part != y.part)
            return false;
        if (!(a.d_of_generator(i) == b.d_of_generator(i))) return false;
    }
    return true;
}

DgaMorphism::DgaMorphism(AlgebraPresentation source, AlgebraPresentation target,
                         std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != source_.generator_count())
        throw InputError("morphism needs one image per source generator");
}

DgaMorphism DgaMorphism::identity(const AlgebraPresentation& a) {
    std::vector<Polynomial> images;
    for (int i = 0; i < a.generator_count(); ++i) images.push_back(a.generator_poly(i));
    return DgaMorphism(a, a, std::move(images));
}

void DgaMorphism::validate() const {
    const bool both_typed = source_.kind() != GradingKind::Graded &&
                            source_.kind() == target_.kind();
    if (source_.field() != target_.field())
        throw InputError("morphism between different coefficient fields");
    for (int i = 0; i < source_.generator_count(); ++i) {
        const Generator& g = source_.generator(i);
        const Polynomial& img = images_[static_cast<size_t>(i)];
        for (const auto& [m, c] : img.terms()) {
            if (m.degree != g.degree)
                throw InputError("image of '" + g.name + "' is not of degree " +
                                 std::to_string(g.degree));
            if (both_typed) {
                auto [p, q] = target_.bidegree_of(m);
                if (p != g.p || q != g.q)
                    throw InputError("image of '" + g.name + "' changes the bidegree");
            }
        }
        Polynomial lhs = target_.d(img);
        Polynomial rhs = apply(source_.d_of_generator(i));
        if (!(lhs == rhs))
            throw InputError("morphism does not commute with d on generator '" + g.name + "'");
    }
}

Polynomial DgaMorphism::apply(const Polynomial& p) const {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        Polynomial word = target_.unit_poly(c);
        for (size_t i = 0; i < static_cast<size_t>(source_.generator_count()); ++i) {
            for (int e = 0; e < m.exps[i]; ++e) {
                word = target_.mul(word, images_[i]);
                if (word.is_zero()) break;
            }
            if (word.is_zero()) break;
        }
        out += word;
    }
    return out;
}

Mat DgaMorphism::matrix(int n) const {
    const auto& src = source_.basis(n);
    Mat m(static_cast<Index>(src.size()), target_.basis_dim(n));
    m.setZero();
    for (size_t i = 0; i < src.size(); ++i) {
        Polynomial mono;
        mono.add(src[i], Scalar(1));
        Polynomial img = apply(mono);
        if (!img.is_zero()) m.row(static_cast<Index>(i)) = target_.to_coords(img, n);
    }
    return m;
}

DgaMorphism compose(const DgaMorphism& g, const DgaMorphism& f) {
    if (!structurally_equal(f.target(), g.source()))
        throw InputError("compose: middle presentations do not match");
    std::vector<Polynomial> images;
    for (int i = 0; i < f.source().generator_count(); ++i) images.push_back(g.apply(f.image(i)));
    return DgaMorphism(f.source(), g.target(), std::move(images));
}

QuasiIsoReport is_quasi_isomorphism(const DgaMorphism& f, int up_to) {
    const int top = std::min(f.source().cutoff(), f.target().cutoff()) - 1;
    if (up_to > top)
        throw InputError("quasi-isomorphism check beyond reportable degree " +
                         std::to_string(top));
    CohomologyTable hs = cohomology(f.source());
    CohomologyTable ht = cohomology(f.target());

    QuasiIsoReport report;
    report.checked_up_to = up_to;
    for (int n = 0; n <= up_to; ++n) {
        const DegreeCohomology& s = hs.at(n);
        const DegreeCohomology& t = ht.at(n);
        // Induced map in the representative bases.
        Mat induced(s.dim(), t.dim());
        induced.setZero();
        Mat fn = f.matrix(n);
        for (Index i = 0; i < s.dim(); ++i) {
            RowVec img = s.representatives.row(i) * fn;
            induced.row(i) = ht.class_coordinates(img, n);
        }
        // Kernel witness: a source class mapped to zero.
        Subspace ker = row_kernel(induced);
        if (ker.dim() > 0) {
            report.failure_degree = n;
            report.failure = QuasiIsoReport::Failure::Kernel;
            RowVec coeffs = ker.basis().row(0);
            RowVec wit = coeffs * s.representatives;
            report.witness = f.source().from_coords(wit, n);
            report.witness_text = "class of " + f.source().poly_str(report.witness) +
                                  " in degree " + std::to_string(n) + " maps to zero";
            return report;
        }
        // Cokernel witness: a target class outside the image.
        Subspace image = row_space(induced);
        if (image.dim() < t.dim()) {
            report.failure_degree = n;
            report.failure = QuasiIsoReport::Failure::Cokernel;
            Mat missing = Subspace::full(t.dim()).quotient_basis(image);
            RowVec wit = missing.row(0) * t.representatives;
            report.witness = f.target().from_coords(wit, n);
            report.witness_text = "class of " + f.target().poly_str(report.witness) +
                                  " in degree " + std::to_string(n) + " is not in the image";
            return report;
        }
    }
    report.ok = true;
    return report;
}

bool is_k_quasi_isomorphism(const DgaMorphism& f, int k) {
    QuasiIsoReport base = is_quasi_isomorphism(f, k);
    if (!base.ok) return false;
    const int top = std::min(f.source().cutoff(), f.target().cutoff()) - 1;
    if (k + 1 > top)
        throw InputError("injectivity degree " + std::to_string(k + 1) +
                         " is beyond the reportable range");
    CohomologyTable hs = cohomology(f.source());
    CohomologyTable ht = cohomology(f.target());
    const DegreeCohomology& s = hs.at(k + 1);
    Mat induced(s.dim(), ht.dim(k + 1));
    induced.setZero();
    Mat fn = f.matrix(k + 1);
    for (Index i = 0; i < s.dim(); ++i)
        induced.row(i) = ht.class_coordinates(RowVec(s.representatives.row(i) * fn), k + 1);
    return rank<Scalar>(induced) == s.dim();
}

KunnethReport kunneth_check(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    AlgebraPresentation prod = tensor(a, b);
    CohomologyTable hp = cohomology(prod);
    CohomologyTable ha = cohomology(a);
    CohomologyTable hb = cohomology(b);

    KunnethReport report;
    report.ok = true;
    for (int n = 0; n <= hp.top_degree(); ++n) {
        Index lhs = hp.dim(n);
        Index rhs = 0;
        for (int i = 0; i <= n; ++i) {
            if (i > ha.top_degree() || n - i > hb.top_degree()) continue;
            rhs += ha.dim(i) * hb.dim(n - i);
        }
        report.product_dims.push_back(lhs);
        report.convolution_dims.push_back(rhs);
        if (lhs != rhs) report.ok = false;
    }
    return report;
}

} // namespace dga
