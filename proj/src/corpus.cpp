#include "dga/corpus.hpp"

#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dga/cohomology.hpp"
#include "dga/errors.hpp"
#include "dga/hodge.hpp"
#include "dga/linalg.hpp"
#include "dga/subspace.hpp"
#include "dga/sullivan.hpp"

namespace dga {

namespace {

std::string lie_name(const LieAlgebraData& g, int i) {
    if (!g.names.empty()) return g.names[static_cast<size_t>(i)];
    return "e" + std::to_string(i + 1);
}

void check_lie_shape(const LieAlgebraData& g) {
    if (g.dim < 0) throw InputError("the Lie algebra dimension must be nonnegative");
    if (!g.names.empty() && static_cast<int>(g.names.size()) != g.dim)
        throw InputError("expected " + std::to_string(g.dim) + " generator names, got " +
                         std::to_string(g.names.size()));
    std::set<std::string> seen;
    for (const std::string& n : g.names)
        if (!seen.insert(n).second) throw InputError("duplicate generator name '" + n + "'");
    for (const auto& [pair, entries] : g.brackets) {
        if (pair.first < 0 || pair.second <= pair.first || pair.second >= g.dim)
            throw InputError("bracket pairs must satisfy 0 <= i < j < dim");
        for (const auto& [k, c] : entries) {
            (void)c;
            if (k < 0 || k >= g.dim)
                throw InputError("bracket coefficient index " + std::to_string(k) +
                                 " is out of range");
        }
    }
}

Vec basis_vec(int dim, int i) {
    Vec v = Vec::Zero(dim);
    v(i) = Scalar(1);
    return v;
}

Vec lie_bracket(const LieAlgebraData& g, const Vec& u, const Vec& v) {
    Vec r = Vec::Zero(g.dim);
    for (const auto& [pair, entries] : g.brackets) {
        Scalar c = u(pair.first) * v(pair.second) - u(pair.second) * v(pair.first);
        if (c.is_zero()) continue;
        for (const auto& [k, s] : entries) r(k) += c * s;
    }
    return r;
}

void check_jacobi(const LieAlgebraData& g) {
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j)
            for (int k = j + 1; k < g.dim; ++k) {
                Vec ei = basis_vec(g.dim, i);
                Vec ej = basis_vec(g.dim, j);
                Vec ek = basis_vec(g.dim, k);
                Vec jac = lie_bracket(g, ei, lie_bracket(g, ej, ek)) +
                          lie_bracket(g, ej, lie_bracket(g, ek, ei)) +
                          lie_bracket(g, ek, lie_bracket(g, ei, ej));
                if (!matrix_is_zero(jac))
                    throw InputError("the bracket data fails the Jacobi identity on (" +
                                     lie_name(g, i) + ", " + lie_name(g, j) + ", " +
                                     lie_name(g, k) + ")");
            }
}

// Dimensions of the strictly positive lower-central-series terms g^1 > g^2 > ...
// Validates the data, the Jacobi identity, and nilpotency.
std::vector<Index> lower_central_dims(const LieAlgebraData& g) {
    check_lie_shape(g);
    check_jacobi(g);
    std::vector<Index> dims;
    Subspace cur = Subspace::full(g.dim);
    while (cur.dim() > 0) {
        dims.push_back(cur.dim());
        Mat rows(static_cast<Index>(g.dim) * cur.dim(), g.dim);
        Index r = 0;
        for (int i = 0; i < g.dim; ++i)
            for (Index t = 0; t < cur.dim(); ++t)
                rows.row(r++) =
                    lie_bracket(g, basis_vec(g.dim, i), Vec(cur.basis().row(t).transpose()))
                        .transpose();
        Subspace nxt = Subspace::span_of_rows(rows, g.dim);
        if (nxt.dim() >= cur.dim())
            throw InputError("the bracket data is not nilpotent: the lower central series "
                             "stabilizes at dimension " +
                             std::to_string(cur.dim()));
        cur = nxt;
    }
    return dims;
}

void check_real_constants(const LieAlgebraData& g) {
    for (const auto& [pair, entries] : g.brackets) {
        (void)pair;
        for (const auto& [k, c] : entries) {
            (void)k;
            if (!c.is_real()) throw InputError("structure constants must be real");
        }
    }
}

std::vector<std::string> spec_names(const TransverseKahlerModelSpec& s) {
    std::vector<std::string> names;
    for (const Generator& g : s.h.generators()) names.push_back(g.name);
    names.insert(names.end(), s.w_real.begin(), s.w_real.end());
    names.insert(names.end(), s.w10.begin(), s.w10.end());
    names.insert(names.end(), s.w01.begin(), s.w01.end());
    return names;
}

// ----- entry fixtures ---------------------------------------------------------

// Free exterior base on `pairs` conjugate pairs a_t (1,0), ab_t (0,1).
AlgebraPresentation complex_torus_base(int pairs, int cutoff) {
    std::vector<Generator> gens;
    for (int t = 1; t <= pairs; ++t) {
        const std::string a = "a" + std::to_string(t);
        const std::string ab = "ab" + std::to_string(t);
        Generator ga;
        ga.name = a;
        ga.degree = 1;
        ga.has_bidegree = true;
        ga.p = 1;
        ga.q = 0;
        ga.conj_name = ab;
        Generator gb;
        gb.name = ab;
        gb.degree = 1;
        gb.has_bidegree = true;
        gb.p = 0;
        gb.q = 1;
        gb.conj_name = a;
        gens.push_back(std::move(ga));
        gens.push_back(std::move(gb));
    }
    AlgebraPresentation h(Field::QI, GradingKind::Bigraded, cutoff, std::move(gens));
    for (int i = 0; i < h.generator_count(); ++i) h.set_d(i, Polynomial());
    return h;
}

// The standard conjugation-invariant class i * sum_t a_t ab_t.
Polynomial torus_kahler(const AlgebraPresentation& h, int pairs) {
    Polynomial k;
    for (int t = 1; t <= pairs; ++t)
        k += h.mul(h.generator_poly("a" + std::to_string(t)),
                   h.generator_poly("ab" + std::to_string(t)))
                 .scaled(Scalar::i());
    return k;
}

LieAlgebraData abelian_lie(int m) {
    LieAlgebraData g;
    g.dim = m;
    return g;
}

// [e1, e2] = e3.
LieAlgebraData heisenberg3_lie() {
    LieAlgebraData g;
    g.dim = 3;
    g.brackets[{0, 1}] = {{2, Scalar(1)}};
    return g;
}

// [e1, e2] = e3, [e1, e3] = e4: three-step.
LieAlgebraData filiform4_lie() {
    LieAlgebraData g;
    g.dim = 4;
    g.brackets[{0, 1}] = {{2, Scalar(1)}};
    g.brackets[{0, 2}] = {{3, Scalar(1)}};
    return g;
}

// Heisenberg(3) plus a central line: [e1, e2] = e3, e4 central.
LieAlgebraData kodaira_thurston_lie() {
    LieAlgebraData g;
    g.dim = 4;
    g.brackets[{0, 1}] = {{2, Scalar(1)}};
    return g;
}

// J e1 = e2, J e3 = e4: the standard abelian complex structure.
Mat kodaira_thurston_j() {
    Mat j = Mat::Zero(4, 4);
    j(1, 0) = Scalar(1);
    j(0, 1) = Scalar(-1);
    j(3, 2) = Scalar(1);
    j(2, 3) = Scalar(-1);
    return j;
}

// ----- report helpers ---------------------------------------------------------

std::string dims_text(const std::vector<Index>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

std::string weights_text(const std::map<int, Index>& m) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [w, count] : m) {
        if (!first) os << ", ";
        first = false;
        os << w << ": " << count;
    }
    os << "}";
    return os.str();
}

void push_check(CorpusReport& rep, std::string label, bool ok, std::string detail) {
    CorpusCheck c;
    c.label = std::move(label);
    c.ok = ok;
    if (!ok) c.detail = std::move(detail);
    rep.checks.push_back(std::move(c));
}

void check_degree_table(CorpusReport& rep, const std::string& label,
                        const std::vector<Index>& expected,
                        const std::vector<Index>& computed) {
    if (expected.empty()) return;
    push_check(rep, label, expected == computed,
               "expected " + dims_text(expected) + ", computed " + dims_text(computed));
}

void check_slot_table(CorpusReport& rep, const std::string& label,
                      const std::map<std::pair<int, int>, Index>& expected,
                      const BigradedCohomologyTable& computed) {
    if (expected.empty()) return;
    for (const auto& [pq, want] : expected) {
        Index got = computed.dim(pq.first, pq.second);
        if (got != want) {
            push_check(rep, label, false,
                       "slot (" + std::to_string(pq.first) + "," + std::to_string(pq.second) +
                           "): expected " + std::to_string(want) + ", computed " +
                           std::to_string(got));
            return;
        }
    }
    push_check(rep, label, true, "");
}

} // namespace

// ----- model builders ---------------------------------------------------------

TransverseKahlerModelSpec hopf_model(int n, const Scalar& c, int cutoff) {
    if (n < 2) throw InputError("hopf_model requires n >= 2, got " + std::to_string(n));
    if (c.is_zero()) throw InputError("the transverse scaling must be nonzero");
    if (cutoff <= 0) cutoff = 2 * n + 1;
    Generator u;
    u.name = "u";
    u.degree = 2;
    u.has_bidegree = true;
    u.p = 1;
    u.q = 1;
    u.power_cap = n - 1;
    u.conj_name = "u";
    AlgebraPresentation h(Field::QI, GradingKind::Bigraded, cutoff, {u});
    h.set_d("u", Polynomial());
    TransverseKahlerModelSpec s;
    s.h = std::move(h);
    Polynomial uu = s.h.generator_poly("u");
    s.w_real = {"x", "y"};
    s.d_w = {uu.scaled(Scalar(c.re())), uu.scaled(Scalar(c.im()))};
    s.w10 = {"z"};
    s.w01 = {"zb"};
    s.dbar_w10 = {uu.scaled(c)};
    s.dbar_w01 = {Polynomial()};
    s.validate();
    return s;
}

TransverseKahlerModelSpec s3s3_model(int cutoff) {
    if (cutoff <= 0) cutoff = 7;
    Generator hx;
    hx.name = "hx";
    hx.degree = 2;
    hx.has_bidegree = true;
    hx.p = 1;
    hx.q = 1;
    hx.power_cap = 1;
    hx.conj_name = "hx";
    Generator hy = hx;
    hy.name = "hy";
    hy.conj_name = "hy";
    AlgebraPresentation h(Field::QI, GradingKind::Bigraded, cutoff, {hx, hy});
    h.set_d("hx", Polynomial());
    h.set_d("hy", Polynomial());
    TransverseKahlerModelSpec s;
    s.h = std::move(h);
    Polynomial px = s.h.generator_poly("hx");
    Polynomial py = s.h.generator_poly("hy");
    s.w_real = {"al", "be"};
    s.d_w = {px, py};
    s.w10 = {"z"};
    s.w01 = {"zb"};
    s.dbar_w10 = {px + py.scaled(Scalar::i())};
    s.dbar_w01 = {Polynomial()};
    s.validate();
    return s;
}

TransverseKahlerModelSpec suffixed_spec(const TransverseKahlerModelSpec& s,
                                        const std::string& suffix) {
    std::vector<Generator> gens = s.h.generators();
    for (Generator& g : gens) {
        g.name += suffix;
        if (!g.conj_name.empty()) g.conj_name += suffix;
    }
    // Renaming preserves the canonical order, so exponent vectors carry over.
    AlgebraPresentation h(s.h.field(), s.h.kind(), s.h.cutoff(), std::move(gens));
    for (int i = 0; i < s.h.generator_count(); ++i) h.set_d(i, s.h.d_of_generator(i));
    TransverseKahlerModelSpec r;
    r.h = std::move(h);
    r.w_real = s.w_real;
    r.w10 = s.w10;
    r.w01 = s.w01;
    for (std::string& n : r.w_real) n += suffix;
    for (std::string& n : r.w10) n += suffix;
    for (std::string& n : r.w01) n += suffix;
    r.d_w = s.d_w;
    r.dbar_w10 = s.dbar_w10;
    r.dbar_w01 = s.dbar_w01;
    r.validate();
    return r;
}

TransverseKahlerModelSpec product_spec(const TransverseKahlerModelSpec& a,
                                       const TransverseKahlerModelSpec& b) {
    a.validate();
    b.validate();
    std::set<std::string> taken;
    for (const std::string& n : spec_names(a)) taken.insert(n);
    for (const std::string& n : spec_names(b))
        if (taken.count(n))
            throw InputError("generator name '" + n +
                             "' appears in both factors; rename one side with suffixed_spec");
    TransverseKahlerModelSpec r;
    r.h = tensor(a.h, b.h);
    // With disjoint names the factor generators keep their relative canonical
    // order inside the product base, so an index remap transports polynomials.
    auto transplant = [&r](const Polynomial& p, const AlgebraPresentation& from) {
        std::vector<int> to(static_cast<size_t>(from.generator_count()));
        for (int i = 0; i < from.generator_count(); ++i)
            to[static_cast<size_t>(i)] = r.h.generator_index(from.generator(i).name);
        return AlgebraPresentation::remap(p, to, r.h);
    };
    r.w_real = a.w_real;
    r.w_real.insert(r.w_real.end(), b.w_real.begin(), b.w_real.end());
    for (const Polynomial& p : a.d_w) r.d_w.push_back(transplant(p, a.h));
    for (const Polynomial& p : b.d_w) r.d_w.push_back(transplant(p, b.h));
    r.w10 = a.w10;
    r.w10.insert(r.w10.end(), b.w10.begin(), b.w10.end());
    r.w01 = a.w01;
    r.w01.insert(r.w01.end(), b.w01.begin(), b.w01.end());
    for (const Polynomial& p : a.dbar_w10) r.dbar_w10.push_back(transplant(p, a.h));
    for (const Polynomial& p : b.dbar_w10) r.dbar_w10.push_back(transplant(p, b.h));
    for (const Polynomial& p : a.dbar_w01) r.dbar_w01.push_back(transplant(p, a.h));
    for (const Polynomial& p : b.dbar_w01) r.dbar_w01.push_back(transplant(p, b.h));
    r.validate();
    return r;
}

// ----- Lie-algebra builders ----------------------------------------------------

int nilpotency_step(const LieAlgebraData& g) {
    return static_cast<int>(lower_central_dims(g).size());
}

std::map<int, Index> lower_central_weights(const LieAlgebraData& g) {
    std::vector<Index> dims = lower_central_dims(g);
    std::map<int, Index> out;
    for (size_t w = 0; w < dims.size(); ++w) {
        Index next = w + 1 < dims.size() ? dims[w + 1] : 0;
        out[static_cast<int>(w) + 1] = dims[w] - next;
    }
    return out;
}

AlgebraPresentation chevalley_eilenberg(const LieAlgebraData& g, int cutoff) {
    lower_central_dims(g); // shape, Jacobi, nilpotency
    check_real_constants(g);
    if (cutoff <= 0) cutoff = g.dim + 2;
    std::vector<Generator> gens;
    for (int i = 0; i < g.dim; ++i) {
        Generator gen;
        gen.name = lie_name(g, i);
        gen.degree = 1;
        gens.push_back(std::move(gen));
    }
    AlgebraPresentation pres(Field::Q, GradingKind::Graded, cutoff, std::move(gens));
    for (int k = 0; k < g.dim; ++k) {
        Polynomial dk;
        for (const auto& [pair, entries] : g.brackets) {
            auto it = entries.find(k);
            if (it == entries.end() || it->second.is_zero()) continue;
            dk += pres.mul(pres.generator_poly(pair.first), pres.generator_poly(pair.second))
                      .scaled(-it->second);
        }
        pres.set_d(k, std::move(dk));
    }
    pres.validate();
    return pres;
}

AlgebraPresentation chevalley_eilenberg(const LieAlgebraData& g, const Mat& j_matrix,
                                        int cutoff) {
    lower_central_dims(g);
    check_real_constants(g);
    if (g.dim % 2 != 0)
        throw InputError("a complex structure needs even dimension, got " +
                         std::to_string(g.dim));
    if (j_matrix.rows() != g.dim || j_matrix.cols() != g.dim)
        throw InputError("the complex structure must be a " + std::to_string(g.dim) + " x " +
                         std::to_string(g.dim) + " matrix");
    for (Index r = 0; r < j_matrix.rows(); ++r)
        for (Index c = 0; c < j_matrix.cols(); ++c)
            if (!j_matrix(r, c).is_real())
                throw InputError("the complex structure must be a real matrix");
    Mat j2 = j_matrix * j_matrix;
    for (Index r = 0; r < j2.rows(); ++r)
        for (Index c = 0; c < j2.cols(); ++c)
            if (j2(r, c) != (r == c ? Scalar(-1) : Scalar(0)))
                throw InputError("the complex structure must square to minus the identity");
    for (int i = 0; i < g.dim; ++i)
        for (int k = i + 1; k < g.dim; ++k) {
            Vec lhs = lie_bracket(g, Vec(j_matrix.col(i)), Vec(j_matrix.col(k)));
            Vec rhs = lie_bracket(g, basis_vec(g.dim, i), basis_vec(g.dim, k));
            if (!matrix_is_zero(Vec(lhs - rhs)))
                throw InputError("the complex structure is not abelian: [J " + lie_name(g, i) +
                                 ", J " + lie_name(g, k) + "] differs from [" + lie_name(g, i) +
                                 ", " + lie_name(g, k) + "]");
        }

    // Rational basis v_1, Jv_1, ..., v_r, Jv_r: a J-invariant span can contain
    // a standard basis vector only together with its J-image, so appending the
    // first missing one always grows the span by two.
    Mat p(g.dim, g.dim);
    int chosen = 0;
    Subspace span(static_cast<Index>(g.dim));
    for (int i = 0; i < g.dim && chosen < g.dim; ++i) {
        Vec ei = basis_vec(g.dim, i);
        if (span.contains(RowVec(ei.transpose()))) continue;
        p.col(chosen) = ei;
        p.col(chosen + 1) = j_matrix * ei;
        chosen += 2;
        Mat rows(chosen, g.dim);
        for (int t = 0; t < chosen; ++t) rows.row(t) = p.col(t).transpose();
        span = Subspace::span_of_rows(rows, g.dim);
    }
    if (chosen != g.dim) throw std::logic_error("complex-structure basis extraction failed");

    // Structure constants in the new basis: [p_a, p_b] = P c'_{ab}.
    std::vector<std::vector<Vec>> cprime(static_cast<size_t>(g.dim),
                                         std::vector<Vec>(static_cast<size_t>(g.dim)));
    for (int a = 0; a < g.dim; ++a)
        for (int b = a + 1; b < g.dim; ++b) {
            Vec w = lie_bracket(g, Vec(p.col(a)), Vec(p.col(b)));
            std::optional<Vec> x = solve_linear(p, w);
            if (!x) throw std::logic_error("change of basis is singular");
            cprime[static_cast<size_t>(a)][static_cast<size_t>(b)] = *x;
        }

    const int rank = g.dim / 2;
    std::vector<Generator> gens;
    for (int t = 1; t <= rank; ++t) {
        const std::string om = "om" + std::to_string(t);
        const std::string omb = "omb" + std::to_string(t);
        Generator go;
        go.name = om;
        go.degree = 1;
        go.has_bidegree = true;
        go.p = 1;
        go.q = 0;
        go.conj_name = omb;
        Generator gb;
        gb.name = omb;
        gb.degree = 1;
        gb.has_bidegree = true;
        gb.p = 0;
        gb.q = 1;
        gb.conj_name = om;
        gens.push_back(std::move(go));
        gens.push_back(std::move(gb));
    }
    if (cutoff <= 0) cutoff = g.dim + 2;
    AlgebraPresentation pres(Field::QI, GradingKind::Bigraded, cutoff, std::move(gens));

    // Dual forms of the new real basis: x_t = (om_t + omb_t)/2 and
    // y_t = -(i/2)(om_t - omb_t).
    const Scalar half = Scalar::fraction(1, 2);
    const Scalar ihalf = Scalar(mpq_class(0), mpq_class(1, 2));
    std::vector<Polynomial> lin(static_cast<size_t>(g.dim));
    for (int t = 0; t < rank; ++t) {
        Polynomial om = pres.generator_poly("om" + std::to_string(t + 1));
        Polynomial omb = pres.generator_poly("omb" + std::to_string(t + 1));
        lin[static_cast<size_t>(2 * t)] = om.scaled(half) + omb.scaled(half);
        lin[static_cast<size_t>(2 * t + 1)] = om.scaled(-ihalf) + omb.scaled(ihalf);
    }
    std::vector<Polynomial> dreal(static_cast<size_t>(g.dim));
    for (int a = 0; a < g.dim; ++a) {
        Polynomial acc;
        for (int b = 0; b < g.dim; ++b)
            for (int c = b + 1; c < g.dim; ++c) {
                const Scalar& coeff = cprime[static_cast<size_t>(b)][static_cast<size_t>(c)](a);
                if (coeff.is_zero()) continue;
                acc += pres.mul(lin[static_cast<size_t>(b)], lin[static_cast<size_t>(c)])
                           .scaled(-coeff);
            }
        dreal[static_cast<size_t>(a)] = std::move(acc);
    }
    for (int t = 0; t < rank; ++t) {
        Polynomial dom = dreal[static_cast<size_t>(2 * t)] +
                         dreal[static_cast<size_t>(2 * t + 1)].scaled(Scalar::i());
        Polynomial domb = dreal[static_cast<size_t>(2 * t)] +
                          dreal[static_cast<size_t>(2 * t + 1)].scaled(-Scalar::i());
        for (const auto& [mono, c] : dom.terms()) {
            (void)c;
            if (pres.bidegree_of(mono) != std::make_pair(1, 1))
                throw std::logic_error(
                    "abelian complex structure produced a differential outside bidegree (1,1)");
        }
        pres.set_d("om" + std::to_string(t + 1), std::move(dom));
        pres.set_d("omb" + std::to_string(t + 1), std::move(domb));
    }
    pres.validate();
    return pres;
}

// ----- transverse wrapping ------------------------------------------------------

TransverseKahlerModelSpec vaisman_model(const AlgebraPresentation& basic_h,
                                        const Polynomial& kahler_class) {
    basic_h.validate();
    if (basic_h.kind() != GradingKind::Bigraded)
        throw InputError("the base of a parallel-Lee-form model must be bigraded");
    for (const char* name : {"theta", "thetaJ", "eta", "etab"})
        if (basic_h.generator_index(name) >= 0)
            throw InputError(std::string("the base already uses the reserved generator name '") +
                             name + "'");
    if (kahler_class.is_zero()) throw InputError("the transverse class must be nonzero");
    for (const auto& [mono, c] : kahler_class.terms()) {
        (void)c;
        if (basic_h.bidegree_of(mono) != std::make_pair(1, 1))
            throw InputError("the transverse class must be homogeneous of bidegree (1,1)");
    }
    if (!(basic_h.conj(kahler_class) == kahler_class))
        throw InputError("the transverse class must be conjugation-invariant");
    TransverseKahlerModelSpec s;
    s.h = basic_h;
    s.w_real = {"theta", "thetaJ"};
    s.d_w = {Polynomial(), kahler_class};
    s.w10 = {"eta"};
    s.w01 = {"etab"};
    s.dbar_w10 = {kahler_class.scaled(Scalar::i())};
    s.dbar_w01 = {Polynomial()};
    s.validate();
    return s;
}

// ----- regression entries --------------------------------------------------------

namespace {

CorpusEntry hopf_entry(int n) {
    CorpusEntry e;
    e.name = "hopf_" + std::to_string(n);
    e.notes = "classical circle-times-odd-sphere tables; antiholomorphic classes "
              "1, zb, u^(n-1) z, u^(n-1) z zb";
    e.spec = hopf_model(n);
    for (int r = 0; r <= 2 * n; ++r)
        e.basic_betti.push_back(r % 2 == 0 && r <= 2 * (n - 1) ? 1 : 0);
    for (int i = 0; i < n; ++i) e.basic_hodge[{i, i}] = 1;
    for (int r = 0; r <= 2 * n; ++r)
        e.de_rham.push_back(r == 0 || r == 1 || r == 2 * n - 1 || r == 2 * n ? 1 : 0);
    e.hodge = {{{0, 0}, 1}, {{0, 1}, 1}, {{n, n - 1}, 1}, {{n, n}, 1}, {{1, 0}, 0}};
    e.fundamental = true;
    e.basic_formal = true;
    e.frolicher_equal = true;
    return e;
}

CorpusEntry s3s3_entry() {
    CorpusEntry e;
    e.name = "s3s3";
    e.notes = "product of two 3-spheres; antiholomorphic table computed by hand on the "
              "16-monomial complex";
    e.spec = s3s3_model();
    e.basic_betti = {1, 0, 2, 0, 1, 0, 0};
    e.basic_hodge = {{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}};
    e.de_rham = {1, 0, 0, 2, 0, 0, 1};
    e.hodge = {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{1, 2}, 1},
               {{2, 2}, 1}, {{3, 2}, 1}, {{3, 3}, 1}, {{1, 0}, 0}, {{2, 0}, 0},
               {{3, 0}, 0}, {{0, 2}, 0}, {{0, 3}, 0}};
    e.fundamental = true;
    e.basic_formal = true;
    e.frolicher_equal = false;
    return e;
}

CorpusEntry kodaira_thurston_entry() {
    CorpusEntry e;
    e.name = "kodaira_thurston";
    e.notes = "classical primary Kodaira surface tables; weights read off the bigraded "
              "minimal model";
    AlgebraPresentation base = complex_torus_base(1, 5);
    e.spec = vaisman_model(base, torus_kahler(base, 1));
    e.basic_betti = {1, 2, 1, 0, 0};
    e.basic_hodge = {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}};
    e.de_rham = {1, 3, 4, 3, 1};
    e.hodge = {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 2}, {{2, 0}, 1}, {{1, 1}, 2},
               {{0, 2}, 1}, {{2, 1}, 2}, {{1, 2}, 1}, {{2, 2}, 1}};
    e.fundamental = true;
    e.basic_formal = true;
    e.frolicher_equal = true;
    e.weight_multiplicities = {{1, 2}, {2, 2}};
    e.weight_n = 2;
    e.weight_k = 1;
    e.weight_count_ok = true;
    return e;
}

CorpusEntry heisenberg5_entry() {
    CorpusEntry e;
    e.name = "heisenberg5_x_r";
    e.notes = "rank-5 Heisenberg algebra times a line; Betti numbers by hand convolution "
              "of (1,4,5,5,4,1) with a circle";
    AlgebraPresentation base = complex_torus_base(2, 7);
    e.spec = vaisman_model(base, torus_kahler(base, 2));
    e.basic_betti = {1, 4, 6, 4, 1, 0, 0};
    e.basic_hodge = {{{0, 0}, 1}, {{1, 0}, 2}, {{0, 1}, 2}, {{2, 0}, 1}, {{1, 1}, 4},
                     {{0, 2}, 1}, {{2, 1}, 2}, {{1, 2}, 2}, {{2, 2}, 1}};
    e.de_rham = {1, 5, 9, 10, 9, 5, 1};
    e.hodge = {{{1, 0}, 2}, {{0, 1}, 3}};
    e.fundamental = true;
    e.basic_formal = true;
    e.frolicher_equal = true;
    e.weight_multiplicities = {{1, 4}, {2, 2}};
    e.weight_n = 3;
    e.weight_k = 1;
    e.weight_count_ok = true;
    return e;
}

CorpusEntry lie_entry(std::string name, std::string notes, const LieAlgebraData& g, int step,
                      std::vector<Index> betti) {
    CorpusEntry e;
    e.name = std::move(name);
    e.notes = std::move(notes);
    e.lie = g;
    e.presentation = chevalley_eilenberg(g, 6);
    e.de_rham = std::move(betti);
    e.nilpotency = step;
    return e;
}

CorpusEntry kodaira_thurston_ce_entry() {
    CorpusEntry e;
    e.name = "kodaira_thurston_ce";
    e.notes = "two-step surface algebra with its abelian complex structure; tables match "
              "the classical surface values";
    e.lie = kodaira_thurston_lie();
    e.presentation = chevalley_eilenberg(kodaira_thurston_lie(), kodaira_thurston_j(), 6);
    e.de_rham = {1, 3, 4, 3, 1, 0};
    e.hodge = {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 2}, {{2, 0}, 1}, {{1, 1}, 2},
               {{0, 2}, 1}, {{2, 1}, 2}, {{1, 2}, 1}, {{2, 2}, 1}};
    e.ddbar_failure_degree = 2;
    e.nilpotency = 2;
    return e;
}

void run_weight_checks_spec(CorpusReport& rep, const CorpusEntry& e,
                            const TransverseKahlerModelSpec& s) {
    MinimalModel mm = minimal_model(build_tot_model(s), 2);
    BigradedModelReport bm = bigraded_minimal_model(mm, s);
    if (!bm.ok) {
        push_check(rep, "weight multiplicities", false,
                   bm.obstruction.empty() ? "bidegree certification failed" : bm.obstruction);
        return;
    }
    std::map<std::string, std::pair<int, int>> types = generator_types(bm);
    WeightCountReport wc = weight_count_check(mm.model, types, e.weight_n, e.weight_k);
    if (!e.weight_multiplicities.empty())
        push_check(rep, "weight multiplicities", wc.multiplicities == e.weight_multiplicities,
                   "computed " + weights_text(wc.multiplicities) + ", expected " +
                       weights_text(e.weight_multiplicities));
    if (e.weight_count_ok)
        push_check(rep, "weight count", wc.ok == *e.weight_count_ok,
                   "total " + std::to_string(wc.total) + ", weighted " +
                       std::to_string(wc.weighted) + ", branch " +
                       std::to_string(wc.dichotomy_branch));
}

} // namespace

CorpusReport run_entry(const CorpusEntry& e) {
    if (e.spec.has_value() == e.presentation.has_value())
        throw InputError("a corpus entry must carry exactly one of a model spec or a "
                         "presentation");
    CorpusReport rep;
    rep.name = e.name;
    if (e.spec) {
        const TransverseKahlerModelSpec& s = *e.spec;
        s.validate();
        if (!e.basic_betti.empty())
            check_degree_table(rep, "basic cohomology", e.basic_betti, cohomology(s.h).dims());
        if (!e.basic_hodge.empty())
            check_slot_table(rep, "basic antiholomorphic table", e.basic_hodge,
                             dolbeault_cohomology(s.h));
        AlgebraPresentation real = build_de_rham_model(s);
        if (!e.de_rham.empty())
            check_degree_table(rep, "de Rham dimensions", e.de_rham, cohomology(real).dims());
        BigradedCohomologyTable hodge = dolbeault_cohomology(build_dolbeault_model(s));
        if (!e.hodge.empty()) check_slot_table(rep, "antiholomorphic table", e.hodge, hodge);
        std::vector<Index> tot_dims = cohomology(build_tot_model(s)).dims();
        std::vector<Index> sums(tot_dims.size(), 0);
        for (const auto& [pq, slot] : hodge.slots()) {
            int r = pq.first + pq.second;
            if (r >= 0 && r < static_cast<int>(sums.size())) sums[static_cast<size_t>(r)] += slot.dim();
        }
        bool bound = true;
        for (size_t r = 0; r < sums.size(); ++r) bound = bound && sums[r] >= tot_dims[r];
        push_check(rep, "degreewise antiholomorphic bound", bound,
                   "totals " + dims_text(sums) + " fall below " + dims_text(tot_dims));
        if (e.frolicher_equal)
            push_check(rep, "antiholomorphic totals equal de Rham", (sums == tot_dims) == *e.frolicher_equal,
                       "totals " + dims_text(sums) + " vs " + dims_text(tot_dims));
        if (e.fundamental)
            push_check(rep, "fundamentality", is_fundamental(s).fundamental == *e.fundamental,
                       "expected " + std::string(*e.fundamental ? "true" : "false"));
        if (e.basic_formal)
            push_check(rep, "base passes the del-dbar check",
                       ddbar_check(s.h).overall == *e.basic_formal,
                       "expected " + std::string(*e.basic_formal ? "true" : "false"));
        if (e.factors.size() == 2) {
            const TransverseKahlerModelSpec& f1 = e.factors[0];
            const TransverseKahlerModelSpec& f2 = e.factors[1];
            AlgebraPresentation r1 = build_de_rham_model(f1);
            AlgebraPresentation r2 = build_de_rham_model(f2);
            push_check(rep, "real model factors as a tensor product",
                       structurally_equal(real, tensor(r1, r2)), "the models differ");
            AlgebraPresentation d1 = build_dolbeault_model(f1);
            AlgebraPresentation d2 = build_dolbeault_model(f2);
            push_check(rep, "antiholomorphic model factors as a tensor product",
                       structurally_equal(build_dolbeault_model(s), tensor(d1, d2)),
                       "the models differ");
            KunnethReport kr = kunneth_check(r1, r2);
            push_check(rep, "Kunneth count for the real factors", kr.ok,
                       "product " + dims_text(kr.product_dims) + " vs convolution " +
                           dims_text(kr.convolution_dims));
            KunnethReport kd = kunneth_check(d1, d2);
            push_check(rep, "Kunneth count for the antiholomorphic factors", kd.ok,
                       "product " + dims_text(kd.product_dims) + " vs convolution " +
                           dims_text(kd.convolution_dims));
        }
        if (e.weight_n > 0) run_weight_checks_spec(rep, e, s);
    } else {
        const AlgebraPresentation& p = *e.presentation;
        p.validate();
        if (!e.de_rham.empty())
            check_degree_table(rep, "cohomology dimensions", e.de_rham, cohomology(p).dims());
        if (!e.hodge.empty())
            check_slot_table(rep, "antiholomorphic table", e.hodge,
                             dolbeault_cohomology(p));
        if (e.ddbar_failure_degree) {
            DdbarReport r = ddbar_check(p);
            int got = r.overall ? -1 : r.first_failure_degree;
            push_check(rep, "del-dbar verdict", got == *e.ddbar_failure_degree,
                       "expected first failure at degree " +
                           std::to_string(*e.ddbar_failure_degree) + ", computed " +
                           std::to_string(got));
        }
        if (e.lie) {
            push_check(rep, "presentation is minimal", is_minimal(p),
                       "a generator differential has a linear term");
            if (e.nilpotency)
                push_check(rep, "nilpotency step",
                           nilpotency_step(*e.lie) == *e.nilpotency,
                           "expected " + std::to_string(*e.nilpotency) + ", computed " +
                               std::to_string(nilpotency_step(*e.lie)));
            if (e.weight_n > 0) {
                std::map<int, Index> m = lower_central_weights(*e.lie);
                if (!e.weight_multiplicities.empty())
                    push_check(rep, "weight multiplicities", m == e.weight_multiplicities,
                               "computed " + weights_text(m) + ", expected " +
                                   weights_text(e.weight_multiplicities));
                if (e.weight_count_ok) {
                    WeightCountReport wc = weight_count_check(m, e.weight_n, e.weight_k);
                    push_check(rep, "weight count", wc.ok == *e.weight_count_ok,
                               "total " + std::to_string(wc.total) + ", weighted " +
                                   std::to_string(wc.weighted) + ", branch " +
                                   std::to_string(wc.dichotomy_branch));
                }
            }
        }
    }
    rep.ok = !rep.checks.empty();
    for (const CorpusCheck& c : rep.checks) rep.ok = rep.ok && c.ok;
    return rep;
}

std::vector<CorpusEntry> product_models() {
    std::vector<CorpusEntry> out;
    {
        CorpusEntry e;
        e.name = "s13_x_s13";
        e.notes = "hand convolution of two circle-times-3-sphere tables";
        TransverseKahlerModelSpec f1 = suffixed_spec(hopf_model(2, Scalar(1), 9), "1");
        TransverseKahlerModelSpec f2 = suffixed_spec(hopf_model(2, Scalar(1), 9), "2");
        e.spec = product_spec(f1, f2);
        e.factors = {std::move(f1), std::move(f2)};
        e.basic_betti = {1, 0, 2, 0, 1, 0, 0, 0, 0};
        e.basic_hodge = {{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}};
        e.de_rham = {1, 2, 1, 2, 4, 2, 1, 2, 1};
        e.hodge = {{{0, 0}, 1}, {{0, 1}, 2}, {{0, 2}, 1}, {{2, 1}, 2}, {{2, 2}, 4},
                   {{2, 3}, 2}, {{4, 2}, 1}, {{4, 3}, 2}, {{4, 4}, 1}, {{1, 0}, 0},
                   {{1, 1}, 0}};
        e.fundamental = true;
        e.basic_formal = true;
        e.frolicher_equal = true;
        out.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "s11_x_s33";
        e.notes = "hand convolution of the torus table with the 3-sphere-product table";
        TransverseKahlerModelSpec t;
        t.h = AlgebraPresentation(Field::QI, GradingKind::Bigraded, 9, {});
        t.w_real = {"x0", "y0"};
        t.d_w = {Polynomial(), Polynomial()};
        t.w10 = {"z0"};
        t.w01 = {"zb0"};
        t.dbar_w10 = {Polynomial()};
        t.dbar_w01 = {Polynomial()};
        TransverseKahlerModelSpec f2 = s3s3_model(9);
        e.spec = product_spec(t, f2);
        e.factors = {std::move(t), std::move(f2)};
        e.basic_betti = {1, 0, 2, 0, 1, 0, 0, 0, 0};
        e.basic_hodge = {{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}};
        e.de_rham = {1, 2, 1, 2, 4, 2, 1, 2, 1};
        e.hodge = {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 2}, {{1, 1}, 3}, {{0, 2}, 1},
                   {{2, 1}, 2}, {{1, 2}, 3}, {{3, 1}, 1}, {{2, 2}, 4}, {{1, 3}, 1},
                   {{3, 2}, 3}, {{2, 3}, 2}, {{4, 2}, 1}, {{3, 3}, 3}, {{4, 3}, 2},
                   {{3, 4}, 1}, {{4, 4}, 1}, {{2, 0}, 0}};
        e.fundamental = true;
        e.basic_formal = true;
        e.frolicher_equal = false;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CorpusEntry> corpus_entries() {
    std::vector<CorpusEntry> out;
    for (int n = 2; n <= 5; ++n) out.push_back(hopf_entry(n));
    out.push_back(s3s3_entry());
    for (CorpusEntry& e : product_models()) out.push_back(std::move(e));
    out.push_back(kodaira_thurston_entry());
    out.push_back(heisenberg5_entry());
    out.push_back(lie_entry("abelian_r2", "exterior algebra on two closed generators",
                            abelian_lie(2), 1, {1, 2, 1, 0, 0, 0}));
    out.push_back(lie_entry("abelian_r3", "exterior algebra on three closed generators",
                            abelian_lie(3), 1, {1, 3, 3, 1, 0, 0}));
    out.push_back(lie_entry("abelian_r4", "exterior algebra on four closed generators",
                            abelian_lie(4), 1, {1, 4, 6, 4, 1, 0}));
    out.push_back(lie_entry("heisenberg_3", "two-step algebra with one bracket",
                            heisenberg3_lie(), 2, {1, 2, 2, 1, 0, 0}));
    {
        CorpusEntry e = lie_entry(
            "filiform_4",
            "three-step chain algebra; lower-central weights overshoot the weighted total",
            filiform4_lie(), 3, {1, 2, 2, 2, 1, 0});
        e.weight_multiplicities = {{1, 2}, {2, 1}, {3, 1}};
        e.weight_n = 2;
        e.weight_k = 1;
        e.weight_count_ok = false;
        out.push_back(std::move(e));
    }
    out.push_back(kodaira_thurston_ce_entry());
    return out;
}

} // namespace dga
