#include "dga/hodge.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "dga/errors.hpp"

namespace dga {

namespace {

using Key = std::pair<int, int>;

Index choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<Index>(r);
}

Mat entrywise_conj(const Mat& m) {
    Mat out = m;
    for (Index i = 0; i < out.rows(); ++i)
        for (Index j = 0; j < out.cols(); ++j) out(i, j) = out(i, j).conj();
    return out;
}

bool is_identity(const Mat& m) {
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (!(m(i, j) == Scalar(i == j ? 1 : 0))) return false;
    return true;
}

bool is_zero_mat(const Mat& m) {
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (!(m(i, j) == Scalar(0))) return false;
    return true;
}

// Span of the unit coordinate rows at the given positions of an ambient slice.
Subspace coordinate_span(Index ambient, const std::vector<int>& positions) {
    Mat rows(static_cast<Index>(positions.size()), ambient);
    rows.setZero();
    for (Index r = 0; r < rows.rows(); ++r) rows(r, positions[static_cast<size_t>(r)]) = Scalar(1);
    return Subspace::span_of_rows(rows, ambient);
}

// Per-generator mixed types of a model built from a tagged base (part H, with
// declared bidegrees) and degree-1 extension generators (part W, counting
// (1,1) toward the mixed type).
struct MixedTypes {
    std::vector<char> is_w;
    std::vector<Key> gen_type;
};

MixedTypes mixed_types(const AlgebraPresentation& tot) {
    MixedTypes t;
    const size_t n = static_cast<size_t>(tot.generator_count());
    t.is_w.resize(n);
    t.gen_type.resize(n);
    for (size_t i = 0; i < n; ++i) {
        const Generator& g = tot.generator(static_cast<int>(i));
        if (g.part == Part::W) {
            t.is_w[i] = 1;
            t.gen_type[i] = {1, 1};
        } else if (g.part == Part::H) {
            t.is_w[i] = 0;
            t.gen_type[i] = {g.p, g.q};
        } else {
            throw InputError("model generator '" + g.name + "' carries no part tag");
        }
    }
    return t;
}

int w_length(const MixedTypes& t, const Monomial& m) {
    int l = 0;
    for (size_t i = 0; i < m.exps.size(); ++i)
        if (t.is_w[i]) l += m.exps[i];
    return l;
}

Key mixed_type(const MixedTypes& t, const Monomial& m) {
    Key k{0, 0};
    for (size_t i = 0; i < m.exps.size(); ++i) {
        k.first += m.exps[i] * t.gen_type[i].first;
        k.second += m.exps[i] * t.gen_type[i].second;
    }
    return k;
}

// Type of a polynomial when all its monomials share one, via the supplied
// per-monomial type; nullopt for zero or mixed-type polynomials.
template <class TypeOf>
std::optional<Key> homogeneous_type(const Polynomial& p, TypeOf&& type_of, bool* mixed) {
    *mixed = false;
    std::optional<Key> t;
    for (const auto& [m, c] : p.terms()) {
        (void)c;
        const Key k = type_of(m);
        if (!t) {
            t = k;
        } else if (*t != k) {
            *mixed = true;
            return std::nullopt;
        }
    }
    return t;
}

// Coordinates modulo `smaller` within `larger`, in the basis extending
// `smaller` to `larger`.
struct QuotientMap {
    Mat lift;     // quotient representatives, one per row
    Mat solver;   // transpose of [lift; smaller basis]
    Index g = 0;

    RowVec project(const RowVec& v) const {
        auto x = solve_linear(solver, Vec(v.transpose()));
        if (!x) throw std::logic_error("vector escapes its graded piece");
        return RowVec(x->head(g).transpose());
    }
};

QuotientMap make_quotient(const Subspace& larger, const Subspace& smaller) {
    QuotientMap qm;
    qm.lift = larger.quotient_basis(smaller);
    qm.g = qm.lift.rows();
    Mat stack(qm.g + smaller.dim(), larger.ambient());
    stack.topRows(qm.g) = qm.lift;
    stack.bottomRows(smaller.dim()) = smaller.basis();
    qm.solver = stack.transpose();
    return qm;
}

} // namespace

void Filtration::set_level(int level, Subspace s) {
    if (s.ambient() != ambient_)
        throw InputError("filtration level " + std::to_string(level) +
                         " has the wrong ambient dimension");
    levels_[level] = std::move(s);
}

int Filtration::lowest() const {
    if (levels_.empty()) throw InputError("filtration stores no levels");
    return levels_.begin()->first;
}

int Filtration::highest() const {
    if (levels_.empty()) throw InputError("filtration stores no levels");
    return levels_.rbegin()->first;
}

Subspace Filtration::at(int level) const {
    if (levels_.empty()) throw InputError("filtration stores no levels");
    if (direction_ == FiltrationDirection::Increasing) {
        auto it = levels_.upper_bound(level);
        if (it == levels_.begin()) return Subspace(ambient_);
        return std::prev(it)->second;
    }
    auto it = levels_.lower_bound(level);
    if (it == levels_.end()) return Subspace(ambient_);
    return it->second;
}

void Filtration::validate() const {
    if (levels_.empty()) throw InputError("filtration stores no levels");
    const Subspace* prev = nullptr;
    for (const auto& [level, s] : levels_) {
        if (s.ambient() != ambient_)
            throw InputError("filtration level " + std::to_string(level) +
                             " has the wrong ambient dimension");
        if (prev) {
            const bool nested = direction_ == FiltrationDirection::Increasing
                                    ? s.contains(*prev)
                                    : prev->contains(s);
            if (!nested)
                throw InputError("filtration levels are not nested at level " +
                                 std::to_string(level));
        }
        prev = &s;
    }
    const Subspace& edge = direction_ == FiltrationDirection::Increasing
                               ? levels_.rbegin()->second
                               : levels_.begin()->second;
    if (!(edge == Subspace::full(ambient_)))
        throw InputError("filtration is not exhaustive: the " +
                         std::string(direction_ == FiltrationDirection::Increasing ? "highest"
                                                                                   : "lowest") +
                         " stored level must be the full space");
}

Conjugation Conjugation::entrywise(Index n) { return Conjugation{Mat::Identity(n, n)}; }

RowVec Conjugation::apply(const RowVec& v) const {
    RowVec c = v;
    for (Index j = 0; j < c.size(); ++j) c(j) = c(j).conj();
    return RowVec(c * matrix);
}

Subspace Conjugation::apply(const Subspace& s) const {
    return s.conjugated().map_rows(matrix);
}

void Conjugation::validate() const {
    if (matrix.rows() != matrix.cols()) throw InputError("conjugation matrix must be square");
    if (!is_identity(Mat(entrywise_conj(matrix) * matrix)))
        throw InputError("conjugation is not an involution");
}

Conjugation degree_conjugation(const AlgebraPresentation& a, int degree) {
    const Index dim = a.basis_dim(degree);
    Mat m(dim, dim);
    m.setZero();
    const auto& basis = a.basis(degree);
    for (Index i = 0; i < dim; ++i) {
        Polynomial p;
        p.add(basis[static_cast<size_t>(i)], Scalar(1));
        m.row(i) = a.to_coords(a.conj(p), degree);
    }
    return Conjugation{std::move(m)};
}

Conjugation cohomology_conjugation(const AlgebraPresentation& a, const CohomologyTable& h,
                                   int degree) {
    const std::vector<Polynomial> reps = h.representative_polys(a, degree);
    const Index dim = static_cast<Index>(reps.size());
    Mat m(dim, dim);
    m.setZero();
    for (Index i = 0; i < dim; ++i)
        m.row(i) = h.class_coordinates(a, a.conj(reps[static_cast<size_t>(i)]));
    return Conjugation{std::move(m)};
}

Index HodgeStructure::dim(int p, int q) const {
    auto it = components.find({p, q});
    return it == components.end() ? 0 : it->second.dim();
}

HodgeStructureReport validate_hodge_structure(const Filtration& f, const Conjugation& conj,
                                              int weight) {
    if (f.direction() != FiltrationDirection::Decreasing)
        throw InputError("the type filtration must be decreasing");
    f.validate();
    conj.validate();
    if (conj.matrix.rows() != f.ambient())
        throw InputError("conjugation and filtration ambient dimensions differ");

    const Index n = f.ambient();
    const Subspace full = Subspace::full(n);
    HodgeStructureReport rep;
    rep.structure.weight = weight;

    const int lo = std::min(f.lowest(), weight - f.highest());
    const int hi = std::max(f.highest() + 1, weight + 1 - f.lowest());
    for (int p = lo; p <= hi; ++p) {
        const Subspace s = f.at(p);
        const Subspace t = conj.apply(f.at(weight + 1 - p));
        const Subspace meet = s.intersect(t);
        const Subspace join = s.sum(t);
        if (meet.dim() > 0 || !(join == full)) {
            rep.ok = false;
            rep.offending_p = p;
            rep.overlap = meet.dim();
            rep.missing = n - join.dim();
            return rep;
        }
    }

    rep.ok = true;
    Index total = 0;
    Subspace acc(n);
    for (int p = lo; p <= hi; ++p) {
        Subspace v = f.at(p).intersect(conj.apply(f.at(weight - p)));
        if (v.dim() == 0) continue;
        total += v.dim();
        acc = acc.sum(v);
        rep.structure.components[{p, weight - p}] = std::move(v);
    }
    if (total != n || !(acc == full))
        throw std::logic_error("splitting holds but the derived components are not a decomposition");
    for (const auto& [key, v] : rep.structure.components) {
        auto it = rep.structure.components.find({key.second, key.first});
        const Subspace target = it == rep.structure.components.end() ? Subspace(n) : it->second;
        if (!(conj.apply(v) == target))
            throw std::logic_error("derived components fail the conjugation swap");
    }
    return rep;
}

Index Bigrading::dim(int p, int q) const {
    auto it = components.find({p, q});
    return it == components.end() ? 0 : it->second.dim();
}

std::vector<std::pair<int, int>> Bigrading::nonzero_slots() const {
    std::vector<Key> out;
    for (const auto& [key, v] : components)
        if (v.dim() > 0) out.push_back(key);
    return out;
}

Bigrading canonical_bigrading(const Filtration& w, const Filtration& f, const Conjugation& conj) {
    if (w.direction() != FiltrationDirection::Increasing)
        throw InputError("the weight filtration must be increasing");
    if (f.direction() != FiltrationDirection::Decreasing)
        throw InputError("the type filtration must be decreasing");
    w.validate();
    f.validate();
    conj.validate();
    if (w.ambient() != f.ambient() || conj.matrix.rows() != w.ambient())
        throw InputError("weight filtration, type filtration and conjugation must share one space");

    const Index n_amb = w.ambient();

    for (const auto& [level, s] : w.levels()) {
        if (!(conj.apply(s) == s))
            throw InputError("weight level " + std::to_string(level) +
                             " is not stable under conjugation");
    }

    // Each graded piece must carry a pure structure of its weight, checked on
    // the quotient with the induced filtration and conjugation.
    for (int n = w.lowest(); n <= w.highest(); ++n) {
        const Subspace wn = w.at(n);
        const Subspace wm = w.at(n - 1);
        const Index g = wn.dim() - wm.dim();
        if (g == 0) continue;
        const QuotientMap qm = make_quotient(wn, wm);

        Filtration fq(FiltrationDirection::Decreasing, g);
        for (int p = f.lowest(); p <= f.highest() + 1; ++p) {
            const Subspace sp = f.at(p).intersect(wn).sum(wm);
            Mat rows(sp.dim(), g);
            rows.setZero();
            for (Index r = 0; r < sp.dim(); ++r) rows.row(r) = qm.project(RowVec(sp.basis().row(r)));
            fq.set_level(p, Subspace::span_of_rows(rows, g));
        }

        Mat cq(g, g);
        cq.setZero();
        for (Index i = 0; i < g; ++i) cq.row(i) = qm.project(conj.apply(RowVec(qm.lift.row(i))));
        if (!is_identity(Mat(entrywise_conj(cq) * cq)))
            throw std::logic_error("induced conjugation on a graded piece is not an involution");

        const HodgeStructureReport hr = validate_hodge_structure(fq, Conjugation{cq}, n);
        if (!hr.ok)
            throw InputError("graded piece at weight " + std::to_string(n) +
                             " carries no pure structure: splitting fails at level " +
                             std::to_string(hr.offending_p));
    }

    Bigrading out;
    out.ambient = n_amb;
    const int p_lo = w.lowest() - f.highest();
    const int p_hi = f.highest();
    for (int n = w.lowest(); n <= w.highest(); ++n) {
        for (int p = p_lo; p <= p_hi; ++p) {
            const int q = n - p;
            const Subspace r = w.at(n).intersect(f.at(p));
            Subspace l = w.at(n).intersect(conj.apply(f.at(q)));
            for (int i = 2; n - i >= w.lowest(); ++i)
                l = l.sum(w.at(n - i).intersect(conj.apply(f.at(q - i + 1))));
            Subspace v = r.intersect(l);
            if (v.dim() == 0) continue;
            out.components[{p, q}] = std::move(v);
            out.r_parts[{p, q}] = r;
            out.l_parts[{p, q}] = l;
        }
    }

    // Certify the decomposition against both filtrations and the swap.
    for (int n = w.lowest(); n <= w.highest(); ++n) {
        Subspace acc(n_amb);
        Index dims = 0;
        for (const auto& [key, v] : out.components) {
            if (key.first + key.second > n) continue;
            acc = acc.sum(v);
            dims += v.dim();
        }
        if (!(acc == w.at(n)) || dims != acc.dim())
            throw std::logic_error("components fail to split weight level " + std::to_string(n));
    }
    for (int r = f.lowest(); r <= f.highest() + 1; ++r) {
        Subspace acc(n_amb);
        Index dims = 0;
        for (const auto& [key, v] : out.components) {
            if (key.first < r) continue;
            acc = acc.sum(v);
            dims += v.dim();
        }
        if (!(acc == f.at(r)) || dims != acc.dim())
            throw std::logic_error("components fail to split type level " + std::to_string(r));
    }
    for (const auto& [key, v] : out.components) {
        Subspace low(n_amb);
        for (const auto& [other, u] : out.components)
            if (other.first + other.second < key.first + key.second) low = low.sum(u);
        auto it = out.components.find({key.second, key.first});
        const Subspace swap = it == out.components.end() ? Subspace(n_amb) : it->second;
        if (!swap.sum(low).contains(conj.apply(v)))
            throw std::logic_error("components fail the conjugation swap modulo lower weight");
    }
    return out;
}

FundamentalityReport is_fundamental(const TransverseKahlerModelSpec& s) {
    s.validate();
    FundamentalityReport rep;
    rep.fundamental = true;
    for (size_t j = 0; j < s.d_w.size(); ++j) {
        Polynomial stray;
        for (const auto& [m, c] : s.d_w[j].terms()) {
            const auto [p, q] = s.h.bidegree_of(m);
            if (!(p == 1 && q == 1)) stray.add(m, c);
        }
        if (!stray.is_zero()) {
            rep.fundamental = false;
            rep.witness = s.w_real[j];
            rep.stray = std::move(stray);
            return rep;
        }
    }
    return rep;
}

ModelFiltrations model_filtrations(const TransverseKahlerModelSpec& s) {
    const FundamentalityReport fr = is_fundamental(s);
    if (!fr.fundamental)
        throw InputError("the differential of extension generator '" + fr.witness +
                         "' has a component outside bidegree (1,1), so the type filtration is "
                         "not differential-compatible");

    ModelFiltrations out;
    out.tot = build_tot_model(s);
    const AlgebraPresentation& tot = out.tot;
    const MixedTypes mt = mixed_types(tot);
    const int k2 = 2 * s.rank();
    const int top = tot.cutoff() - 1;

    for (int r = 0; r <= top; ++r) {
        const auto& basis = tot.basis(r);
        const Index dim = tot.basis_dim(r);
        Filtration wf(FiltrationDirection::Increasing, dim);
        for (int j = 0; j <= k2; ++j) {
            std::vector<int> pos;
            for (size_t t = 0; t < basis.size(); ++t)
                if (w_length(mt, basis[t]) <= j) pos.push_back(static_cast<int>(t));
            wf.set_level(j, coordinate_span(dim, pos));
        }
        wf.validate();
        Filtration ff(FiltrationDirection::Decreasing, dim);
        for (int p = 0; p <= r + 1; ++p) {
            std::vector<int> pos;
            for (size_t t = 0; t < basis.size(); ++t)
                if (mixed_type(mt, basis[t]).first >= p) pos.push_back(static_cast<int>(t));
            ff.set_level(p, coordinate_span(dim, pos));
        }
        ff.validate();
        out.weight_slices.push_back(std::move(wf));
        out.hodge_slices.push_back(std::move(ff));
    }

    const LevelFunction level = [mt](const Monomial& m) { return -w_length(mt, m); };
    out.pages = spectral_pages(tot, level, 2);

    out.d0_trivial = true;
    for (const auto& [key, d] : out.pages[0].differentials) {
        (void)key;
        if (!is_zero_mat(d)) {
            out.d0_trivial = false;
            break;
        }
    }

    std::map<Key, Index> predicted;
    for (int l = 0; l <= k2; ++l) {
        for (int j = 0; j <= s.h.cutoff(); ++j) {
            if (j + l > top) continue;
            const Index d = s.h.basis_dim(j) * choose(k2, l);
            if (d > 0) predicted[{-l, j + 2 * l}] = d;
        }
    }
    out.e1_identified = true;
    for (const auto& [key, d] : predicted) {
        if (out.pages[1].dim(key.first, key.second) != d) {
            out.e1_identified = false;
            break;
        }
    }
    if (out.e1_identified) {
        for (const auto& [key, m] : out.pages[1].bases) {
            auto it = predicted.find(key);
            const Index want = it == predicted.end() ? 0 : it->second;
            if (m.rows() != want) {
                out.e1_identified = false;
                break;
            }
        }
    }

    out.h = cohomology(tot);
    for (int r = 0; r <= top; ++r) {
        DegreeMixedHodge dm;
        dm.degree = r;
        const Subspace& z = out.h.at(r).cocycles;
        const Index hdim = out.h.dim(r);
        auto classes_of = [&](const Subspace& cap) {
            Mat rows(cap.dim(), hdim);
            rows.setZero();
            for (Index i = 0; i < cap.dim(); ++i)
                rows.row(i) = out.h.class_coordinates(RowVec(cap.basis().row(i)), r);
            return Subspace::span_of_rows(rows, hdim);
        };
        Filtration wf(FiltrationDirection::Increasing, hdim);
        for (int j = 0; j <= k2; ++j)
            wf.set_level(r + j, classes_of(z.intersect(out.weight_slices[static_cast<size_t>(r)].at(j))));
        Filtration ff(FiltrationDirection::Decreasing, hdim);
        for (int p = 0; p <= r + 1; ++p)
            ff.set_level(p, classes_of(z.intersect(out.hodge_slices[static_cast<size_t>(r)].at(p))));
        dm.conj = cohomology_conjugation(tot, out.h, r);
        try {
            dm.bigrading = canonical_bigrading(wf, ff, dm.conj);
        } catch (const InputError& e) {
            throw InputError("degree " + std::to_string(r) + ": " + e.what());
        }
        dm.weight = std::move(wf);
        dm.hodge = std::move(ff);
        out.cohomology.push_back(std::move(dm));
    }

    out.ok = out.d0_trivial && out.e1_identified;
    return out;
}

ShapeCheckReport h1_h2_shape_check(const Bigrading& h1, const Bigrading& h2) {
    static const std::set<Key> allowed1 = {{1, 0}, {0, 1}, {1, 1}};
    static const std::set<Key> allowed2 = {{2, 0}, {1, 1}, {0, 2}, {2, 1}, {1, 2}, {2, 2}};
    ShapeCheckReport rep;
    rep.h1_slots = h1.nonzero_slots();
    rep.h2_slots = h2.nonzero_slots();
    for (const Key& k : rep.h1_slots)
        if (allowed1.count(k) == 0) rep.h1_offending.push_back(k);
    for (const Key& k : rep.h2_slots)
        if (allowed2.count(k) == 0) rep.h2_offending.push_back(k);
    rep.ok = rep.h1_offending.empty() && rep.h2_offending.empty();
    return rep;
}

BigradedModelReport bigraded_minimal_model(const MinimalModel& m,
                                           const TransverseKahlerModelSpec& s) {
    const ModelFiltrations mf = model_filtrations(s);
    if (!structurally_equal(m.map.target(), mf.tot))
        throw InputError("the minimal model's target is not the complexified total model of the spec");
    if (m.certified_up_to < 0) throw InputError("the minimal model carries no certificate");

    const AlgebraPresentation& model = m.model;
    const MixedTypes mt = mixed_types(mf.tot);
    const int gens = model.generator_count();

    BigradedModelReport rep;
    std::vector<Key> type(static_cast<size_t>(gens), {-1, -1});
    std::vector<char> has(static_cast<size_t>(gens), 0);
    rep.assigned = true;

    auto fail = [&](const std::string& why) {
        rep.assigned = false;
        rep.obstruction = why;
    };

    for (int i = 0; i < gens && rep.assigned; ++i) {
        const Generator& g = model.generator(i);
        bool mixed = false;

        std::optional<Key> t_img = homogeneous_type(
            m.map.image(i), [&](const Monomial& mono) { return mixed_type(mt, mono); }, &mixed);
        if (mixed) {
            fail("the image of generator '" + g.name + "' is not bidegree-homogeneous");
            break;
        }

        bool undetermined = false;
        std::optional<Key> t_d = homogeneous_type(
            model.d_of_generator(i),
            [&](const Monomial& mono) {
                Key k{0, 0};
                for (size_t j = 0; j < mono.exps.size(); ++j) {
                    if (mono.exps[j] == 0) continue;
                    if (!has[j]) {
                        undetermined = true;
                        continue;
                    }
                    k.first += mono.exps[j] * type[j].first;
                    k.second += mono.exps[j] * type[j].second;
                }
                return k;
            },
            &mixed);
        if (undetermined) {
            fail("the differential of generator '" + g.name + "' involves an unassigned generator");
            break;
        }
        if (mixed) {
            fail("the differential of generator '" + g.name + "' is not bidegree-homogeneous");
            break;
        }

        if (t_img && t_d && *t_img != *t_d) {
            fail("image and differential of generator '" + g.name + "' disagree on the bidegree");
            break;
        }
        if (!t_img && !t_d) {
            fail("the bidegree of generator '" + g.name +
                 "' is undetermined: zero image and zero differential");
            break;
        }
        type[static_cast<size_t>(i)] = t_img ? *t_img : *t_d;
        has[static_cast<size_t>(i)] = 1;
    }

    for (int i = 0; i < gens; ++i) {
        GeneratorBidegree gb;
        gb.name = model.generator(i).name;
        gb.degree = model.generator(i).degree;
        if (has[static_cast<size_t>(i)]) {
            gb.p = type[static_cast<size_t>(i)].first;
            gb.q = type[static_cast<size_t>(i)].second;
        }
        rep.assignment.push_back(std::move(gb));
    }
    if (!rep.assigned) return rep;

    auto model_type = [&](const Monomial& mono) {
        Key k{0, 0};
        for (size_t j = 0; j < mono.exps.size(); ++j) {
            k.first += mono.exps[j] * type[j].first;
            k.second += mono.exps[j] * type[j].second;
        }
        return k;
    };

    rep.differential_ok = true;
    for (int i = 0; i < gens && rep.differential_ok; ++i) {
        for (const auto& [mono, c] : model.d_of_generator(i).terms()) {
            (void)c;
            if (model_type(mono) != type[static_cast<size_t>(i)]) {
                rep.differential_ok = false;
                break;
            }
        }
    }

    const int top = std::min({m.certified_up_to + 1, mf.tot.cutoff() - 1, model.cutoff() - 1});
    rep.checked_up_to = top;
    rep.images_ok = true;
    for (int r = 0; r <= top && rep.images_ok; ++r) {
        const auto& basis = model.basis(r);
        const Mat& dmat = model.d_matrix(r, 0);
        const Mat phi = m.map.matrix(r);
        std::map<Key, std::vector<int>> slices;
        for (size_t t = 0; t < basis.size(); ++t)
            slices[model_type(basis[t])].push_back(static_cast<int>(t));
        for (const auto& [key, pos] : slices) {
            Mat rows(static_cast<Index>(pos.size()), dmat.cols());
            rows.setZero();
            for (size_t t = 0; t < pos.size(); ++t)
                rows.row(static_cast<Index>(t)) = dmat.row(pos[t]);
            const Subspace zs = row_kernel(rows);
            for (Index t = 0; t < zs.dim() && rep.images_ok; ++t) {
                RowVec full(model.basis_dim(r));
                full.setZero();
                for (size_t u = 0; u < pos.size(); ++u)
                    full(pos[u]) = zs.basis()(t, static_cast<Index>(u));
                const RowVec cls = mf.h.class_coordinates(RowVec(full * phi), r);
                bool zero = true;
                for (Index u = 0; u < cls.size(); ++u)
                    if (!(cls(u) == Scalar(0))) zero = false;
                if (zero) continue;
                const Bigrading& b = mf.cohomology[static_cast<size_t>(r)].bigrading;
                auto it = b.components.find(key);
                if (it == b.components.end() || !it->second.contains(cls)) rep.images_ok = false;
            }
            if (!rep.images_ok) break;
        }
    }

    rep.ok = rep.assigned && rep.differential_ok && rep.images_ok;
    return rep;
}

std::map<std::string, std::pair<int, int>> generator_types(const BigradedModelReport& r) {
    if (!r.assigned)
        throw InputError("bidegree assignment carries an obstruction: " + r.obstruction);
    std::map<std::string, Key> out;
    for (const GeneratorBidegree& g : r.assignment) out[g.name] = {g.p, g.q};
    return out;
}

WeightCountReport weight_count_check(const std::map<int, Index>& multiplicities, int n, int k) {
    WeightCountReport rep;
    rep.multiplicities = multiplicities;
    for (const auto& [w, m] : multiplicities) {
        rep.total += m;
        rep.weighted += static_cast<Index>(w) * m;
    }
    rep.total_ok = rep.total == static_cast<Index>(2 * n);
    rep.weighted_ok = rep.weighted == static_cast<Index>(2 * n + 2 * k);
    if (k == 1) {
        auto mw = [&](int w) {
            auto it = multiplicities.find(w);
            return it == multiplicities.end() ? Index(0) : it->second;
        };
        Index tail3 = 0;
        for (const auto& [w, m] : multiplicities)
            if (w >= 3) tail3 += m;
        const bool branch1 = mw(2) == 2 && tail3 == 0;
        const bool branch2 = mw(2) == 0 && mw(3) == 1 && tail3 - mw(3) == 0;
        rep.dichotomy_branch = branch1 ? 1 : (branch2 ? 2 : 0);
    } else {
        rep.dichotomy_branch = -1;
    }
    rep.ok = rep.total_ok && rep.weighted_ok && (k != 1 || rep.dichotomy_branch != 0);
    return rep;
}

WeightCountReport weight_count_check(const AlgebraPresentation& model,
                                     const std::map<std::string, std::pair<int, int>>& types,
                                     int n, int k) {
    std::map<int, Index> mults;
    for (const Generator& g : model.generators()) {
        if (g.degree != 1) continue;
        auto it = types.find(g.name);
        if (it == types.end())
            throw InputError("no bidegree supplied for generator '" + g.name + "'");
        mults[it->second.first + it->second.second] += 1;
    }
    return weight_count_check(mults, n, k);
}

BigradedLiePresentation dual_lie_presentation(
    const AlgebraPresentation& model, const std::map<std::string, std::pair<int, int>>& types) {
    model.validate();
    if (!is_minimal(model)) throw InputError("the presentation is not minimal");
    for (const Generator& g : model.generators())
        if (g.degree != 1)
            throw InputError("expected a presentation generated in degree 1; generator '" +
                             g.name + "' has degree " + std::to_string(g.degree));
    if (model.cutoff() < 2)
        throw InputError("cutoff too small to read the quadratic differential");

    const int gens = model.generator_count();
    std::vector<Key> t(static_cast<size_t>(gens));
    for (int i = 0; i < gens; ++i) {
        auto it = types.find(model.generator(i).name);
        if (it == types.end())
            throw InputError("no bidegree supplied for generator '" + model.generator(i).name +
                             "'");
        t[static_cast<size_t>(i)] = it->second;
    }
    for (int i = 0; i < gens; ++i) {
        for (const auto& [mono, c] : model.d_of_generator(i).terms()) {
            (void)c;
            Key k{0, 0};
            for (size_t j = 0; j < mono.exps.size(); ++j) {
                k.first += mono.exps[j] * t[j].first;
                k.second += mono.exps[j] * t[j].second;
            }
            if (k != t[static_cast<size_t>(i)])
                throw InputError("the differential of generator '" + model.generator(i).name +
                                 "' is not of type (0,0) under the given bidegrees");
        }
    }

    static const std::set<Key> gen_allowed = {{-1, 0}, {0, -1}, {-1, -1}};
    static const std::set<Key> rel_allowed = {{-1, -1}, {-1, -2}, {-2, -1}, {-2, -2}};

    BigradedLiePresentation out;
    out.generator_types_ok = true;
    for (int i = 0; i < gens; ++i) {
        LieGenerator lg;
        lg.name = model.generator(i).name;
        lg.p = -t[static_cast<size_t>(i)].first;
        lg.q = -t[static_cast<size_t>(i)].second;
        if (gen_allowed.count({lg.p, lg.q}) == 0) out.generator_types_ok = false;
        out.generators.push_back(std::move(lg));
    }

    out.relation_types_ok = true;
    for (int i = 0; i < gens; ++i) {
        for (int j = i + 1; j < gens; ++j) {
            LieRelation rel;
            rel.i = i;
            rel.j = j;
            rel.p = -(t[static_cast<size_t>(i)].first + t[static_cast<size_t>(j)].first);
            rel.q = -(t[static_cast<size_t>(i)].second + t[static_cast<size_t>(j)].second);
            Monomial mono = model.unit_monomial();
            mono.degree = 2;
            mono.exps[static_cast<size_t>(i)] = 1;
            mono.exps[static_cast<size_t>(j)] = 1;
            rel.bracket = RowVec(gens);
            rel.bracket.setZero();
            for (int g = 0; g < gens; ++g) {
                const auto& terms = model.d_of_generator(g).terms();
                auto it = terms.find(mono);
                if (it != terms.end()) rel.bracket(g) = -it->second;
            }
            rel.allowed = rel_allowed.count({rel.p, rel.q}) > 0;
            if (!rel.allowed && out.relation_types_ok) {
                out.relation_types_ok = false;
                out.offending = {rel.p, rel.q};
            }
            out.relations.push_back(std::move(rel));
        }
    }

    out.ok = out.generator_types_ok && out.relation_types_ok;
    return out;
}

} // namespace dga
