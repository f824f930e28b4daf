#include "dga/hirsch.hpp"

#include <algorithm>

#include "dga/errors.hpp"

namespace dga {

void validate_hirsch_data(const HirschData& h) {
    h.base.validate();
    if (h.degree < 1) throw InputError("Hirsch extension degree must be positive");
    if (h.names.size() != h.beta.size())
        throw InputError("Hirsch extension needs one cocycle per new generator");
    if (h.names.empty()) throw InputError("Hirsch extension with no new generators");
    for (size_t i = 0; i < h.names.size(); ++i) {
        const std::string& name = h.names[i];
        if (h.base.generator_index(name) >= 0)
            throw InputError("extension generator '" + name + "' collides with the base");
        for (size_t j = 0; j < i; ++j)
            if (h.names[j] == name)
                throw InputError("extension generator '" + name + "' repeated");
        const Polynomial& b = h.beta[i];
        for (const auto& [m, c] : b.terms())
            if (m.degree != h.degree + 1)
                throw InputError("cocycle for '" + name + "' is not of degree " +
                                 std::to_string(h.degree + 1));
        if (!h.base.d(b).is_zero())
            throw InputError("cocycle condition fails on extension generator '" + name +
                             "': d(beta) is nonzero");
    }
}

AlgebraPresentation hirsch_extend(const HirschData& h, std::vector<int>* base_to_new) {
    validate_hirsch_data(h);
    std::vector<Generator> extra;
    for (const std::string& name : h.names) {
        Generator g;
        g.name = name;
        g.degree = h.degree;
        g.part = Part::W;
        extra.push_back(std::move(g));
    }
    std::vector<int> map;
    AlgebraPresentation ext = h.base.extended(extra, &map);
    for (size_t i = 0; i < h.names.size(); ++i)
        ext.set_d(ext.generator_index(h.names[i]),
                  AlgebraPresentation::remap(h.beta[i], map, ext));
    ext.validate();
    if (base_to_new) *base_to_new = std::move(map);
    return ext;
}

HirschSpectralResult weight_spectral_sequence(const HirschData& h) {
    HirschSpectralResult out;
    std::vector<int> map;
    out.extension = hirsch_extend(h, &map);

    // Base degree of a monomial: total degree minus the extension part.
    std::vector<bool> is_new(static_cast<size_t>(out.extension.generator_count()), true);
    for (int idx : map) is_new[static_cast<size_t>(idx)] = false;
    const AlgebraPresentation& ext = out.extension;
    const int k = h.degree;
    LevelFunction base_degree = [&ext, is_new, k](const Monomial& m) {
        int new_part = 0;
        for (size_t i = 0; i < m.exps.size(); ++i)
            if (is_new[i]) new_part += m.exps[i];
        return m.degree - k * new_part;
    };
    out.pages = spectral_pages(out.extension, base_degree, 3);
    out.degeneration = degeneration_report(out.extension, out.pages.back());
    return out;
}

namespace {

DgaMorphism extend_morphism(const DgaMorphism& f, const HirschData& hs, const HirschData& ht,
                            const std::vector<Polynomial>& target_corrections) {
    std::vector<int> map_s, map_t;
    AlgebraPresentation bs = hirsch_extend(hs, &map_s);
    AlgebraPresentation bt = hirsch_extend(ht, &map_t);

    std::vector<Polynomial> images(static_cast<size_t>(bs.generator_count()));
    for (int i = 0; i < f.source().generator_count(); ++i)
        images[static_cast<size_t>(map_s[static_cast<size_t>(i)])] =
            AlgebraPresentation::remap(f.image(i), map_t, bt);
    for (size_t v = 0; v < hs.names.size(); ++v) {
        Polynomial img = bt.generator_poly(ht.names[v]);
        if (!target_corrections.empty() && !target_corrections[v].is_zero())
            img += AlgebraPresentation::remap(target_corrections[v], map_t, bt);
        images[static_cast<size_t>(bs.generator_index(hs.names[v]))] = std::move(img);
    }
    DgaMorphism ext(std::move(bs), std::move(bt), std::move(images));
    ext.validate();
    return ext;
}

} // namespace

TransferResult transfer_extension_forward(const DgaMorphism& f, const HirschData& h) {
    if (!structurally_equal(f.source(), h.base))
        throw InputError("forward transfer: the datum does not live over the map's source");
    validate_hirsch_data(h);

    HirschData out;
    out.base = f.target();
    out.degree = h.degree;
    out.names = h.names;
    for (const Polynomial& b : h.beta) out.beta.push_back(f.apply(b));
    validate_hirsch_data(out);

    DgaMorphism ext = extend_morphism(f, h, out, {});
    const int top = std::min(ext.source().cutoff(), ext.target().cutoff()) - 1;
    QuasiIsoReport cert = is_quasi_isomorphism(ext, top);
    return TransferResult{std::move(out), std::move(ext), std::move(cert)};
}

TransferResult transfer_extension_backward(const DgaMorphism& f, const HirschData& h) {
    if (!structurally_equal(f.target(), h.base))
        throw InputError("backward transfer: the datum does not live over the map's target");
    validate_hirsch_data(h);
    const int k = h.degree;
    const int top = std::min(f.source().cutoff(), f.target().cutoff()) - 1;
    if (k + 1 > top)
        throw InputError("backward transfer: degree " + std::to_string(k + 1) +
                         " cocycles are beyond the reportable range");

    CohomologyTable hs = cohomology(f.source());
    CohomologyTable ht = cohomology(f.target());
    const DegreeCohomology& src = hs.at(k + 1);

    // Induced matrix on degree-(k+1) classes.
    Mat induced(src.dim(), ht.dim(k + 1));
    induced.setZero();
    Mat fk = f.matrix(k + 1);
    for (Index i = 0; i < src.dim(); ++i)
        induced.row(i) = ht.class_coordinates(RowVec(src.representatives.row(i) * fk), k + 1);

    HirschData pulled;
    pulled.base = f.source();
    pulled.degree = k;
    pulled.names = h.names;
    std::vector<Polynomial> corrections;
    for (size_t v = 0; v < h.names.size(); ++v) {
        RowVec target_class = ht.class_coordinates(f.target().to_coords(h.beta[v], k + 1), k + 1);
        auto u = solve_linear<Scalar>(induced.transpose(), target_class.transpose());
        if (!u)
            throw InputError("backward transfer: class of the cocycle for '" + h.names[v] +
                             "' is not hit — unsolvable system (map is not a "
                             "quasi-isomorphism in degree " +
                             std::to_string(k + 1) + ")");
        RowVec coords = u->transpose() * src.representatives;
        pulled.beta.push_back(f.source().from_coords(coords, k + 1));

        // f(beta_1 v) - beta_2 v is exact; solve d(c_v) = difference.
        Polynomial diff = f.apply(pulled.beta.back()) - h.beta[v];
        Polynomial correction;
        if (!diff.is_zero()) {
            RowVec rhs = f.target().to_coords(diff, k + 1);
            auto c = solve_linear<Scalar>(f.target().d_matrix(k).transpose(), rhs.transpose());
            if (!c)
                throw InputError("backward transfer: exactness witness for '" + h.names[v] +
                                 "' has no solution (internal)");
            correction = f.target().from_coords(c->transpose(), k);
        }
        corrections.push_back(std::move(correction));
    }
    validate_hirsch_data(pulled);

    DgaMorphism ext = extend_morphism(f, pulled, h, corrections);
    QuasiIsoReport cert = is_quasi_isomorphism(ext, top);
    return TransferResult{std::move(pulled), std::move(ext), std::move(cert)};
}

DgaMorphism shift_isomorphism(const HirschData& h, const std::vector<Polynomial>& eta) {
    validate_hirsch_data(h);
    if (eta.size() != h.names.size())
        throw InputError("shift_isomorphism needs one degree-k element per new generator");
    HirschData shifted = h;
    for (size_t i = 0; i < eta.size(); ++i) {
        for (const auto& [m, c] : eta[i].terms())
            if (m.degree != h.degree)
                throw InputError("shift for '" + h.names[i] + "' is not of degree " +
                                 std::to_string(h.degree));
        shifted.beta[i] += h.base.d(eta[i]);
    }

    std::vector<int> map_s, map_t;
    AlgebraPresentation bs = hirsch_extend(h, &map_s);
    AlgebraPresentation bt = hirsch_extend(shifted, &map_t);

    std::vector<Polynomial> images(static_cast<size_t>(bs.generator_count()));
    for (int i = 0; i < h.base.generator_count(); ++i)
        images[static_cast<size_t>(map_s[static_cast<size_t>(i)])] =
            AlgebraPresentation::remap(h.base.generator_poly(i), map_t, bt);
    for (size_t v = 0; v < h.names.size(); ++v) {
        Polynomial img = bt.generator_poly(h.names[v]);
        img -= AlgebraPresentation::remap(eta[v], map_t, bt);
        images[static_cast<size_t>(bs.generator_index(h.names[v]))] = std::move(img);
    }
    DgaMorphism iso(std::move(bs), std::move(bt), std::move(images));
    iso.validate();
    return iso;
}

} // namespace dga
