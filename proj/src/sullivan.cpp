#include "dga/sullivan.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dga/errors.hpp"
#include "dga/hirsch.hpp"

namespace dga {

namespace {

constexpr int kMaxRoundsPerDegree = 64;
constexpr int kMaxGenerators = 512;

unsigned lcg_next(unsigned& state) {
    state = state * 1664525u + 1013904223u;
    return state;
}

// Invertible row mixing (sequential elementary row additions); preserves the
// row span, so seeded runs pick different representatives of the same spaces.
void mix_rows(Mat& rows, unsigned& state) {
    const Index n = rows.rows();
    if (n < 2) return;
    for (Index i = 0; i < n; ++i) {
        Index j = static_cast<Index>(lcg_next(state) % static_cast<unsigned>(n));
        if (j == i) continue;
        int c = 1 + static_cast<int>(lcg_next(state) % 3u);
        rows.row(i) += rows.row(j) * Scalar(c);
    }
}

// The growing tower and its comparison data. Generator images live in the
// fixed target and are keyed by name, so extensions never invalidate them.
struct Tower {
    const AlgebraPresentation* target = nullptr;
    const CohomologyTable* target_h = nullptr;
    AlgebraPresentation model;
    std::map<std::string, Polynomial> image_by_name;
};

DgaMorphism snapshot(const Tower& t) {
    std::vector<Polynomial> images;
    images.reserve(static_cast<size_t>(t.model.generator_count()));
    for (int i = 0; i < t.model.generator_count(); ++i)
        images.push_back(t.image_by_name.at(t.model.generator(i).name));
    return DgaMorphism(t.model, *t.target, std::move(images));
}

// Matrix of the induced map on degree-n cohomology: one row per model class,
// columns indexed by target classes.
Mat induced_on_classes(const Tower& t, const CohomologyTable& model_h,
                       const DgaMorphism& phi, int n) {
    const Mat& reps = model_h.at(n).representatives;
    Mat mapped = reps * phi.matrix(n);
    Mat out(reps.rows(), t.target_h->at(n).dim());
    for (Index i = 0; i < mapped.rows(); ++i)
        out.row(i) = t.target_h->class_coordinates(mapped.row(i), n);
    return out;
}

Polynomial combine(const std::vector<Polynomial>& polys, const Mat& coeffs, Index row) {
    Polynomial out;
    for (Index j = 0; j < coeffs.cols(); ++j)
        if (!(coeffs(row, j) == Scalar(0)))
            out += polys[static_cast<size_t>(j)].scaled(coeffs(row, j));
    return out;
}

// One Hirsch extension adjoining generators named m{degree}_{stage}_{i} with
// the given differentials (in the current model) and target images.
void adjoin(Tower& t, int degree, int stage, std::vector<Polynomial> betas,
            const std::vector<Polynomial>& images) {
    if (t.model.generator_count() + static_cast<int>(betas.size()) > kMaxGenerators)
        throw CutoffError("minimal model construction exceeded the generator budget in degree " +
                              std::to_string(degree),
                          degree);
    HirschData h;
    h.degree = degree;
    for (size_t i = 0; i < betas.size(); ++i)
        h.names.push_back("m" + std::to_string(degree) + "_" + std::to_string(stage) + "_" +
                          std::to_string(i));
    h.beta = std::move(betas);
    h.base = std::move(t.model);
    t.model = hirsch_extend(h);
    for (size_t i = 0; i < h.names.size(); ++i)
        t.image_by_name[h.names[i]] = images[i];
}

// Adjoin closed degree-n generators mapping onto a complement of the image of
// the induced map on H^n. Returns the number of generators added.
Index surject_degree(Tower& t, int n, int stage, unsigned& state, bool mix) {
    if (t.target_h->dim(n) == 0) return 0;
    DgaMorphism phi = snapshot(t);
    CohomologyTable model_h = cohomology(t.model);
    Mat ind = induced_on_classes(t, model_h, phi, n);
    Subspace image = row_space(ind);
    Mat missing = Subspace::full(t.target_h->dim(n)).quotient_basis(image);
    if (missing.rows() == 0) return 0;
    if (mix) mix_rows(missing, state);
    std::vector<Polynomial> target_reps = t.target_h->representative_polys(*t.target, n);
    std::vector<Polynomial> betas(static_cast<size_t>(missing.rows()));
    std::vector<Polynomial> images;
    for (Index r = 0; r < missing.rows(); ++r)
        images.push_back(combine(target_reps, missing, r));
    adjoin(t, n, stage, std::move(betas), images);
    return missing.rows();
}

// Adjoin degree-n generators killing the kernel of the induced map on
// H^{n+1}: for a kernel class [z], the new generator v has dv = z and its
// image solves d w = phi(z) in the target (solvable since the class dies).
// Returns the number of generators added.
Index kill_kernel(Tower& t, int n, int stage, unsigned& state, bool mix) {
    DgaMorphism phi = snapshot(t);
    CohomologyTable model_h = cohomology(t.model);
    Mat ind = induced_on_classes(t, model_h, phi, n + 1);
    Subspace kernel = row_kernel(ind);
    if (kernel.dim() == 0) return 0;
    Mat kb = kernel.basis();
    if (mix) mix_rows(kb, state);
    std::vector<Polynomial> model_reps = model_h.representative_polys(t.model, n + 1);
    const Mat& dn = t.target->d_matrix(n);
    std::vector<Polynomial> betas, images;
    for (Index r = 0; r < kb.rows(); ++r) {
        Polynomial z = combine(model_reps, kb, r);
        RowVec rhs = t.target->to_coords(phi.apply(z), n + 1);
        auto x = solve_linear(Mat(dn.transpose()), DenseVector<Scalar>(rhs.transpose()));
        if (!x)
            throw InputError("internal: a kernel class failed to bound in the target (degree " +
                             std::to_string(n + 1) + ")");
        betas.push_back(std::move(z));
        images.push_back(t.target->from_coords(RowVec(x->transpose()), n));
    }
    adjoin(t, n, stage, std::move(betas), images);
    return kb.rows();
}

Tower start_tower(const AlgebraPresentation& a, const CohomologyTable& table) {
    Tower t;
    t.target = &a;
    t.target_h = &table;
    t.model = AlgebraPresentation(a.field(), GradingKind::Graded, a.cutoff(), {});
    return t;
}

MinimalModel finish(Tower& t, int claimed_up_to) {
    DgaMorphism phi = snapshot(t);
    phi.validate();
    QuasiIsoReport report = is_quasi_isomorphism(phi, claimed_up_to);
    return MinimalModel{std::move(t.model), std::move(phi),
                        report.ok ? claimed_up_to : -1};
}

} // namespace

MinimalModel minimal_model(const AlgebraPresentation& a, int up_to, unsigned seed) {
    a.validate();
    if (up_to < 0 || up_to > a.cutoff() - 2)
        throw InputError("minimal_model: degree bound must lie in [0, cutoff-2]; got " +
                         std::to_string(up_to) + " with cutoff " + std::to_string(a.cutoff()));
    CohomologyTable table = cohomology(a);
    Tower t = start_tower(a, table);
    unsigned state = seed ^ 0x9e3779b9u;
    const bool mix = seed != 0;
    for (int n = 1; n <= up_to; ++n) {
        surject_degree(t, n, 0, state, mix);
        int round = 1;
        while (kill_kernel(t, n, round, state, mix) > 0) {
            if (++round > kMaxRoundsPerDegree)
                throw CutoffError(
                    "minimal model construction did not stabilize in degree " + std::to_string(n),
                    n);
        }
    }
    return finish(t, up_to);
}

MinimalModel one_minimal_model(const AlgebraPresentation& a, int stages) {
    a.validate();
    if (stages < 1) throw InputError("one_minimal_model: at least one stage is required");
    if (a.cutoff() < 3)
        throw InputError("one_minimal_model: cutoff must be at least 3 so that H^1 and H^2 "
                         "are below the truncation");
    CohomologyTable table = cohomology(a);
    Tower t = start_tower(a, table);
    unsigned state = 0;
    surject_degree(t, 1, 1, state, false);
    for (int s = 2; s <= stages; ++s)
        if (kill_kernel(t, 1, s, state, false) == 0) break;
    DgaMorphism phi = snapshot(t);
    phi.validate();
    int certified = is_k_quasi_isomorphism(phi, 1) ? 1 : 0;
    return MinimalModel{std::move(t.model), std::move(phi), certified};
}

bool is_minimal(const AlgebraPresentation& a) {
    a.validate();
    for (int i = 0; i < a.generator_count(); ++i)
        for (const auto& [m, c] : a.d_of_generator(i).terms())
            if (m.word_length() < 2) return false;
    return true;
}

FormalityCertificate is_formal_certificate(const AlgebraPresentation& a, int up_to) {
    a.validate();
    FormalityCertificate cert;
    cert.checked_up_to = up_to < a.cutoff() - 2 ? up_to : a.cutoff() - 2;
    if (cert.checked_up_to < 0) cert.checked_up_to = 0;

    bool zero_d = true;
    for (int i = 0; i < a.generator_count() && zero_d; ++i)
        zero_d = a.d_of_generator(i).is_zero();
    if (zero_d) {
        cert.formal = true;
        cert.strategy = "zero-differential";
        cert.zigzag = {"(H, 0) == A: the differential vanishes, so the presentation is its own "
                       "cohomology model and the identity is the zig-zag"};
        return cert;
    }

    try {
        MinimalModel mm = minimal_model(a, cert.checked_up_to);
        bool model_zero_d = true;
        for (int i = 0; i < mm.model.generator_count() && model_zero_d; ++i)
            model_zero_d = mm.model.d_of_generator(i).is_zero();
        if (model_zero_d && mm.certified_up_to == cert.checked_up_to) {
            cert.formal = true;
            cert.strategy = "minimal-model";
            cert.zigzag = {
                "(H, 0) <-- identity -- M: the minimal model carries zero differential",
                "M -- comparison map --> A: quasi-isomorphism certified up to degree " +
                    std::to_string(cert.checked_up_to)};
            cert.witness = std::move(mm);
            return cert;
        }
        cert.failure_reason = "the minimal model carries a nonzero differential within degree " +
                              std::to_string(cert.checked_up_to);
    } catch (const CutoffError& e) {
        cert.failure_reason = std::string("minimal model construction hit a resource bound: ") +
                              e.what();
    }
    cert.failure_reason += "; zig-zag strategy search exhausted (this is not a proof of "
                           "non-formality)";
    return cert;
}

} // namespace dga
