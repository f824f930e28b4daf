#include "dga/filtered.hpp"

#include <algorithm>

#include "dga/errors.hpp"

namespace dga {

Index SpectralPage::dim(int p, int q) const {
    auto it = bases.find({p, q});
    return it == bases.end() ? 0 : it->second.rows();
}

Index SpectralPage::total(int n) const {
    Index out = 0;
    for (const auto& [pq, m] : bases)
        if (pq.first + pq.second == n) out += m.rows();
    return out;
}

namespace {

struct SlotData {
    Subspace numerator;
    Subspace denominator;
    Mat representatives;
};

class PageBuilder {
  public:
    PageBuilder(const AlgebraPresentation& a, const LevelFunction& level)
        : a_(a), level_(level), top_(a.cutoff() - 1) {
        levels_.resize(static_cast<size_t>(top_) + 2);
        for (int n = 0; n <= top_ + 1; ++n) {
            auto& lv = levels_[static_cast<size_t>(n)];
            for (const Monomial& m : a_.basis(n)) lv.push_back(level_(m));
        }
    }

    int top() const { return top_; }

    int min_level(int n) const {
        const auto& lv = levels_[static_cast<size_t>(n)];
        return lv.empty() ? 0 : *std::min_element(lv.begin(), lv.end());
    }
    int max_level(int n) const {
        const auto& lv = levels_[static_cast<size_t>(n)];
        return lv.empty() ? -1 : *std::max_element(lv.begin(), lv.end());
    }

    // F^p within C^n as a coordinate subspace.
    Subspace filtration(int n, int p) const {
        if (n < 0 || n > top_ + 1) return Subspace(0);
        const auto& lv = levels_[static_cast<size_t>(n)];
        Index count = 0;
        for (int l : lv)
            if (l >= p) ++count;
        Mat rows(count, static_cast<Index>(lv.size()));
        rows.setZero();
        Index r = 0;
        for (size_t i = 0; i < lv.size(); ++i)
            if (lv[i] >= p) rows(r++, static_cast<Index>(i)) = Scalar(1);
        return Subspace::span_of_rows(rows, static_cast<Index>(lv.size()));
    }

    // Z_r^{p,q} = F^p ∩ d^{-1}(F^{p+r}); for r < 0 just F^p (no condition).
    Subspace cycles(int r, int p, int q) const {
        const int n = p + q;
        if (n < 0 || n > top_) return Subspace(n >= 0 && n <= top_ + 1 ? a_.basis_dim(n) : 0);
        Subspace fp = filtration(n, p);
        if (r < 0) return fp;
        Subspace target = filtration(n + 1, p + r);
        return fp.intersect(target.preimage_rows(a_.d_matrix(n)));
    }

    SlotData slot(int r, int p, int q) const {
        SlotData out;
        out.numerator = cycles(r, p, q);
        Subspace carried = cycles(r - 1, p + 1, q - 1);
        const int n = p + q;
        Subspace bounded(a_.basis_dim(n));
        if (n >= 1) {
            Subspace source = cycles(r - 1, p - r + 1, q + r - 2);
            bounded = source.map_rows(a_.d_matrix(n - 1));
        }
        out.denominator = carried.sum(bounded);
        out.representatives = out.numerator.quotient_basis(out.denominator);
        return out;
    }

    const AlgebraPresentation& pres() const { return a_; }

  private:
    const AlgebraPresentation& a_;
    const LevelFunction& level_;
    int top_;
    std::vector<std::vector<int>> levels_;
};

// Class coordinates of a vector of the numerator modulo the denominator, in
// the representative basis of the slot.
RowVec slot_class(const SlotData& s, const RowVec& v) {
    const Mat& reps = s.representatives;
    const Mat& den = s.denominator.basis();
    Mat stacked(reps.rows() + den.rows(), v.cols());
    stacked.topRows(reps.rows()) = reps;
    stacked.bottomRows(den.rows()) = den;
    auto x = solve_linear<Scalar>(stacked.transpose(), v.transpose());
    if (!x) throw InputError("spectral page: image escaped its slot (filtration not preserved)");
    RowVec out(reps.rows());
    for (Index i = 0; i < reps.rows(); ++i) out(i) = (*x)(i);
    return out;
}

} // namespace

std::vector<SpectralPage> spectral_pages(const AlgebraPresentation& a,
                                         const LevelFunction& level, int count) {
    PageBuilder builder(a, level);
    std::vector<SpectralPage> pages;
    for (int r = 0; r < count; ++r) {
        SpectralPage page;
        page.r = r;
        std::map<std::pair<int, int>, SlotData> slots;
        for (int n = 0; n <= builder.top(); ++n) {
            for (int p = builder.min_level(n); p <= builder.max_level(n); ++p) {
                SlotData s = builder.slot(r, p, n - p);
                if (s.representatives.rows() == 0) continue;
                page.bases.emplace(std::make_pair(p, n - p), s.representatives);
                slots.emplace(std::make_pair(p, n - p), std::move(s));
            }
        }
        for (const auto& [pq, s] : slots) {
            auto [p, q] = pq;
            const int n = p + q;
            if (n + 1 > builder.top()) continue; // target degree not reported
            auto target = slots.find({p + r, q - r + 1});
            if (target == slots.end()) continue;
            Mat dmat(s.representatives.rows(), target->second.representatives.rows());
            for (Index i = 0; i < s.representatives.rows(); ++i) {
                RowVec img = s.representatives.row(i) * a.d_matrix(n);
                dmat.row(i) = slot_class(target->second, img);
            }
            if (!matrix_is_zero(dmat)) page.differentials.emplace(pq, std::move(dmat));
        }
        pages.push_back(std::move(page));
    }
    return pages;
}

DegenerationReport degeneration_report(const AlgebraPresentation& a, const SpectralPage& page) {
    DegenerationReport report;
    CohomologyTable h = cohomology(a);
    report.degenerate = true;
    for (int n = 0; n <= h.top_degree(); ++n) {
        report.page_totals.push_back(page.total(n));
        report.h_dims.push_back(h.dim(n));
        if (page.total(n) != h.dim(n)) {
            report.degenerate = false;
            report.active_degrees.push_back(n);
        }
    }
    return report;
}

} // namespace dga
