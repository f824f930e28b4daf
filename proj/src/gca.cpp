#include "dga/gca.hpp"

#include <algorithm>
#include <sstream>

#include "dga/errors.hpp"

namespace dga {

bool Monomial::is_unit() const {
    for (int e : exps)
        if (e != 0) return false;
    return true;
}

int Monomial::word_length() const {
    int n = 0;
    for (int e : exps) n += e;
    return n;
}

bool Monomial::operator<(const Monomial& o) const {
    if (degree != o.degree) return degree < o.degree;
    // Word-lexicographic within a degree: at the first generator where the
    // exponents differ, the larger exponent sorts first.
    const size_t n = std::min(exps.size(), o.exps.size());
    for (size_t i = 0; i < n; ++i)
        if (exps[i] != o.exps[i]) return exps[i] > o.exps[i];
    return exps.size() < o.exps.size();
}

void Polynomial::add(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial out;
    if (c.is_zero()) return out;
    for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
    return out;
}

namespace {

bool is_odd_degree(int degree) { return degree % 2 != 0; }

} // namespace

AlgebraPresentation::AlgebraPresentation(Field field, GradingKind kind, int cutoff,
                                         std::vector<Generator> generators)
    : field_(field), kind_(kind), cutoff_(cutoff), gens_(std::move(generators)) {
    if (cutoff_ < 0) throw InputError("cutoff must be nonnegative");
    std::stable_sort(gens_.begin(), gens_.end(),
                     [](const Generator& a, const Generator& b) { return a.degree < b.degree; });
    for (size_t i = 0; i < gens_.size(); ++i) {
        Generator& g = gens_[i];
        if (g.name.empty()) throw InputError("generator with empty name");
        if (g.degree < 1)
            throw InputError("generator '" + g.name + "' must have positive degree");
        if (is_odd_degree(g.degree)) {
            if (g.power_cap > 1)
                throw InputError("generator '" + g.name + "' is odd; power cap is implicit");
            g.power_cap = 1;
        } else if (g.power_cap < 0) {
            throw InputError("generator '" + g.name + "' has negative power cap");
        }
        if (!index_.emplace(g.name, static_cast<int>(i)).second)
            throw InputError("duplicate generator name '" + g.name + "'");
    }
    conj_.assign(gens_.size(), -1);
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].conj_name.empty()) continue;
        auto it = index_.find(gens_[i].conj_name);
        if (it == index_.end())
            throw InputError("conjugate partner '" + gens_[i].conj_name + "' of '" +
                             gens_[i].name + "' is not a generator");
        conj_[i] = it->second;
    }
    d_.resize(gens_.size());
    d_set_.assign(gens_.size(), false);
}

int AlgebraPresentation::generator_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

bool AlgebraPresentation::has_conjugation() const {
    for (int c : conj_)
        if (c >= 0) return true;
    return false;
}

void AlgebraPresentation::set_d(const std::string& gen_name, Polynomial value) {
    int i = generator_index(gen_name);
    if (i < 0) throw InputError("set_d: unknown generator '" + gen_name + "'");
    set_d(i, std::move(value));
}

void AlgebraPresentation::set_d(int index, Polynomial value) {
    d_[static_cast<size_t>(index)] = std::move(value);
    d_set_[static_cast<size_t>(index)] = true;
    d_matrix_cache_.clear();
}

const Polynomial& AlgebraPresentation::d_of_generator(int index) const {
    if (!d_set_[static_cast<size_t>(index)])
        throw InputError("differential of generator '" + gens_[static_cast<size_t>(index)].name +
                         "' was never assigned");
    return d_[static_cast<size_t>(index)];
}

Monomial AlgebraPresentation::unit_monomial() const {
    Monomial m;
    m.degree = 0;
    m.exps.assign(gens_.size(), 0);
    return m;
}

Monomial AlgebraPresentation::generator_monomial(int index) const {
    Monomial m = unit_monomial();
    m.exps[static_cast<size_t>(index)] = 1;
    m.degree = gens_[static_cast<size_t>(index)].degree;
    return m;
}

Polynomial AlgebraPresentation::generator_poly(int index, const Scalar& c) const {
    Polynomial p;
    p.add(generator_monomial(index), c);
    return p;
}

Polynomial AlgebraPresentation::generator_poly(const std::string& name, const Scalar& c) const {
    int i = generator_index(name);
    if (i < 0) throw InputError("unknown generator '" + name + "'");
    return generator_poly(i, c);
}

Polynomial AlgebraPresentation::unit_poly(const Scalar& c) const {
    Polynomial p;
    p.add(unit_monomial(), c);
    return p;
}

std::pair<int, int> AlgebraPresentation::bidegree_of(const Monomial& m) const {
    int p = 0, q = 0;
    for (size_t i = 0; i < gens_.size(); ++i) {
        int e = m.exps[i];
        if (e == 0) continue;
        if (!gens_[i].has_bidegree)
            throw InputError("generator '" + gens_[i].name + "' carries no bidegree");
        p += e * gens_[i].p;
        q += e * gens_[i].q;
    }
    return {p, q};
}

bool AlgebraPresentation::is_homogeneous(const Polynomial& p, int* degree_out) const {
    if (p.is_zero()) {
        if (degree_out) *degree_out = 0;
        return true;
    }
    int deg = p.terms().begin()->first.degree;
    for (const auto& [m, c] : p.terms())
        if (m.degree != deg) return false;
    if (degree_out) *degree_out = deg;
    return true;
}

std::optional<std::pair<Monomial, int>> AlgebraPresentation::mul_monomials(
    const Monomial& a, const Monomial& b) const {
    const size_t n = gens_.size();
    Monomial out;
    out.exps.resize(n);
    for (size_t i = 0; i < n; ++i) {
        int e = a.exps[i] + b.exps[i];
        const Generator& g = gens_[i];
        if (g.power_cap > 0 && e > g.power_cap) return std::nullopt; // truncated to zero
        out.exps[i] = e;
    }
    out.degree = a.degree + b.degree;
    if (out.degree > cutoff_)
        throw CutoffError("product of degree " + std::to_string(out.degree) +
                              " exceeds the cutoff " + std::to_string(cutoff_),
                          out.degree);
    // Koszul sign: odd generators of b crossing higher-indexed odd generators of a.
    int crossings = 0;
    int suffix_odd_a = 0;
    for (size_t i = 0; i < n; ++i)
        if (is_odd_degree(gens_[i].degree)) suffix_odd_a += a.exps[i];
    for (size_t i = 0; i < n; ++i) {
        if (!is_odd_degree(gens_[i].degree)) continue;
        suffix_odd_a -= a.exps[i]; // now counts a's odd letters with index > i
        crossings += b.exps[i] * suffix_odd_a;
    }
    return std::make_pair(std::move(out), crossings % 2 == 0 ? 1 : -1);
}

Polynomial AlgebraPresentation::mul(const Polynomial& a, const Polynomial& b) const {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            auto prod = mul_monomials(ma, mb);
            if (!prod) continue;
            Scalar c = ca * cb;
            if (prod->second < 0) c = -c;
            out.add(prod->first, c);
        }
    }
    return out;
}

Polynomial AlgebraPresentation::pow(const Polynomial& a, int k) const {
    Polynomial out = unit_poly();
    for (int i = 0; i < k; ++i) out = mul(out, a);
    return out;
}

Polynomial AlgebraPresentation::d_monomial(const Monomial& m) const {
    Polynomial out;
    int prefix_parity = 0;
    for (size_t t = 0; t < gens_.size(); ++t) {
        int e = m.exps[t];
        if (e == 0) continue;
        const int deg = gens_[t].degree;
        const Polynomial& dg = d_of_generator(static_cast<int>(t));
        if (!dg.is_zero()) {
            // d(m) picks up e * (-1)^(P + Q*(deg+1)) * dg * (m / g_t), where P is
            // the parity of the prefix and Q that of the prefix joined with
            // g_t^(e-1); the second exponent moves dg back across that block.
            int p_par = prefix_parity;
            int q_par = (p_par + (e - 1) * deg) % 2;
            int sign_par = (p_par + q_par * (deg + 1)) % 2;
            Monomial rest = m;
            rest.exps[t] -= 1;
            rest.degree -= deg;
            Polynomial rest_poly;
            rest_poly.add(rest, Scalar(sign_par == 0 ? e : -e));
            out += mul(dg, rest_poly);
        }
        prefix_parity = (prefix_parity + e * deg) % 2;
    }
    return out;
}

Polynomial AlgebraPresentation::d(const Polynomial& p) const {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) out += d_monomial(m).scaled(c);
    return out;
}

namespace {

Polynomial project_bidegree(const AlgebraPresentation& pres, const Polynomial& p, int tp,
                            int tq) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        auto [mp, mq] = pres.bidegree_of(m);
        if (mp == tp && mq == tq) out.add(m, c);
    }
    return out;
}

} // namespace

Polynomial AlgebraPresentation::del(const Polynomial& p) const {
    if (kind_ == GradingKind::Dolbeault) return Polynomial();
    if (kind_ != GradingKind::Bigraded)
        throw InputError("del is only defined for bigraded presentations");
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        auto [mp, mq] = bidegree_of(m);
        Polynomial dm = d_monomial(m).scaled(c);
        out += project_bidegree(*this, dm, mp + 1, mq);
    }
    return out;
}

Polynomial AlgebraPresentation::dbar(const Polynomial& p) const {
    if (kind_ == GradingKind::Dolbeault) return d(p);
    if (kind_ != GradingKind::Bigraded)
        throw InputError("dbar is only defined for bigraded presentations");
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        auto [mp, mq] = bidegree_of(m);
        Polynomial dm = d_monomial(m).scaled(c);
        out += project_bidegree(*this, dm, mp, mq + 1);
    }
    return out;
}

Polynomial AlgebraPresentation::conj(const Polynomial& p) const {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        // Conjugate the word letter by letter, then sort back; only odd-odd
        // transpositions contribute to the sign.
        std::vector<int> word;
        for (size_t i = 0; i < gens_.size(); ++i) {
            int ci = conj_[i] >= 0 ? conj_[i] : static_cast<int>(i);
            for (int e = 0; e < m.exps[i]; ++e) word.push_back(ci);
        }
        int crossings = 0;
        for (size_t s = 0; s < word.size(); ++s) {
            if (!is_odd_degree(gens_[static_cast<size_t>(word[s])].degree)) continue;
            for (size_t t = s + 1; t < word.size(); ++t) {
                if (!is_odd_degree(gens_[static_cast<size_t>(word[t])].degree)) continue;
                if (word[s] > word[t]) ++crossings;
            }
        }
        Monomial cm = unit_monomial();
        cm.degree = m.degree;
        for (int idx : word) cm.exps[static_cast<size_t>(idx)] += 1;
        Scalar coef = c.conj();
        if (crossings % 2 != 0) coef = -coef;
        out.add(cm, coef);
    }
    return out;
}

void AlgebraPresentation::check_degree_in_range(int n) const {
    if (n > cutoff_)
        throw CutoffError("degree " + std::to_string(n) + " exceeds the cutoff " +
                              std::to_string(cutoff_),
                          n);
}

const std::vector<Monomial>& AlgebraPresentation::basis(int n) const {
    check_degree_in_range(n);
    auto it = basis_cache_.find(n);
    if (it != basis_cache_.end()) return it->second;
    std::vector<Monomial> out;
    if (n >= 0) {
        Monomial cur = unit_monomial();
        // Enumerate exponent vectors with the given total degree.
        auto rec = [&](auto&& self, size_t i, int remaining) -> void {
            if (i == gens_.size()) {
                if (remaining == 0) {
                    cur.degree = n;
                    out.push_back(cur);
                }
                return;
            }
            const Generator& g = gens_[i];
            int max_e = remaining / g.degree;
            if (g.power_cap > 0) max_e = std::min(max_e, g.power_cap);
            for (int e = 0; e <= max_e; ++e) {
                cur.exps[i] = e;
                self(self, i + 1, remaining - e * g.degree);
            }
            cur.exps[i] = 0;
        };
        rec(rec, 0, n);
        std::sort(out.begin(), out.end());
    }
    auto [pos, inserted] = basis_cache_.emplace(n, std::move(out));
    return pos->second;
}

int AlgebraPresentation::basis_position(const Monomial& m) const {
    auto it = basis_pos_cache_.find(m.degree);
    if (it == basis_pos_cache_.end()) {
        std::map<Monomial, int> positions;
        const auto& b = basis(m.degree);
        for (size_t i = 0; i < b.size(); ++i) positions.emplace(b[i], static_cast<int>(i));
        it = basis_pos_cache_.emplace(m.degree, std::move(positions)).first;
    }
    auto pos = it->second.find(m);
    if (pos == it->second.end())
        throw InputError("monomial " + monomial_str(m) + " is not a basis element");
    return pos->second;
}

std::vector<int> AlgebraPresentation::type_positions(int n, int p, int q) const {
    std::vector<int> out;
    const auto& b = basis(n);
    for (size_t i = 0; i < b.size(); ++i) {
        auto [mp, mq] = bidegree_of(b[i]);
        if (mp == p && mq == q) out.push_back(static_cast<int>(i));
    }
    return out;
}

RowVec AlgebraPresentation::to_coords(const Polynomial& p, int degree) const {
    RowVec v(basis_dim(degree));
    v.setZero();
    for (const auto& [m, c] : p.terms()) {
        if (m.degree != degree)
            throw InputError("polynomial is not homogeneous of degree " + std::to_string(degree));
        v(basis_position(m)) = c;
    }
    return v;
}

Polynomial AlgebraPresentation::from_coords(const RowVec& v, int degree) const {
    const auto& b = basis(degree);
    if (v.cols() != static_cast<Index>(b.size()))
        throw InputError("coordinate vector does not match the basis dimension");
    Polynomial p;
    for (size_t i = 0; i < b.size(); ++i) p.add(b[i], v(static_cast<Index>(i)));
    return p;
}

const Mat& AlgebraPresentation::d_matrix(int n, int which) const {
    auto key = std::make_pair(n, which);
    auto it = d_matrix_cache_.find(key);
    if (it != d_matrix_cache_.end()) return it->second;
    const auto& src = basis(n);
    const Index cols = basis_dim(n + 1);
    Mat m(static_cast<Index>(src.size()), cols);
    m.setZero();
    for (size_t i = 0; i < src.size(); ++i) {
        Polynomial mono;
        mono.add(src[i], Scalar(1));
        Polynomial image = which == 0 ? d(mono) : which == 1 ? del(mono) : dbar(mono);
        if (!image.is_zero()) m.row(static_cast<Index>(i)) = to_coords(image, n + 1);
    }
    return d_matrix_cache_.emplace(key, std::move(m)).first->second;
}

void AlgebraPresentation::validate() const {
    const bool needs_bidegree =
        kind_ == GradingKind::Bigraded || kind_ == GradingKind::Dolbeault ||
        kind_ == GradingKind::Split;
    int max_degree = 0;
    for (size_t i = 0; i < gens_.size(); ++i) {
        const Generator& g = gens_[i];
        max_degree = std::max(max_degree, g.degree);
        if (needs_bidegree && !g.has_bidegree)
            throw InputError("generator '" + g.name + "' needs a bidegree in this grading kind");
        if (g.has_bidegree &&
            (kind_ == GradingKind::Bigraded || kind_ == GradingKind::Dolbeault)) {
            if (g.p + g.q != g.degree)
                throw InputError("generator '" + g.name + "' has bidegree not summing to degree");
            if (g.p < 0 || g.q < 0)
                throw InputError("generator '" + g.name + "' has a negative bidegree component");
        }
    }
    if (cutoff_ < max_degree + 2)
        throw InputError("cutoff " + std::to_string(cutoff_) +
                         " is too small to validate d^2 = 0 (need top generator degree + 2)");

    // Conjugation: all-or-nothing involution with matching data.
    bool any_conj = false, all_conj = true;
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (conj_[i] >= 0)
            any_conj = true;
        else
            all_conj = false;
    }
    if (any_conj) {
        if (field_ == Field::Q)
            throw InputError("conjugate partners require field Q(i)");
        if (!all_conj)
            throw InputError("conjugation must be declared on every generator or none");
        for (size_t i = 0; i < gens_.size(); ++i) {
            int j = conj_[i];
            if (conj_[static_cast<size_t>(j)] != static_cast<int>(i))
                throw InputError("conjugation is not an involution at '" + gens_[i].name + "'");
            const Generator& a = gens_[i];
            const Generator& b = gens_[static_cast<size_t>(j)];
            if (a.degree != b.degree || a.power_cap != b.power_cap)
                throw InputError("conjugate partners '" + a.name + "', '" + b.name +
                                 "' have mismatched degree data");
            if (a.has_bidegree != b.has_bidegree || (a.has_bidegree && (a.p != b.q || a.q != b.p)))
                throw InputError("conjugate partners '" + a.name + "', '" + b.name +
                                 "' must have swapped bidegrees");
        }
    }

    for (size_t i = 0; i < gens_.size(); ++i) {
        const Generator& g = gens_[i];
        const Polynomial& dg = d_of_generator(static_cast<int>(i));
        for (const auto& [m, c] : dg.terms()) {
            if (m.degree != g.degree + 1)
                throw InputError("d(" + g.name + ") is not homogeneous of degree " +
                                 std::to_string(g.degree + 1));
            if (field_ == Field::Q && !c.is_real())
                throw InputError("d(" + g.name + ") has a non-real coefficient over Q");
            if (kind_ == GradingKind::Bigraded || kind_ == GradingKind::Dolbeault ||
                kind_ == GradingKind::Split) {
                auto [mp, mq] = bidegree_of(m);
                bool ok = true;
                switch (kind_) {
                    case GradingKind::Bigraded:
                        ok = (mp == g.p + 1 && mq == g.q) || (mp == g.p && mq == g.q + 1);
                        break;
                    case GradingKind::Dolbeault:
                        ok = (mp == g.p && mq == g.q + 1);
                        break;
                    case GradingKind::Split:
                        ok = (mp == g.p && mq == g.q);
                        break;
                    default:
                        break;
                }
                if (!ok)
                    throw InputError("d(" + g.name + ") violates the bidegree rule of its kind");
            }
        }
        Polynomial dd = d(dg);
        if (!dd.is_zero())
            throw InputError("d^2 is nonzero on generator '" + g.name +
                             "': " + poly_str(dd));
    }

    if (any_conj) {
        for (size_t i = 0; i < gens_.size(); ++i) {
            Polynomial lhs = conj(d_of_generator(static_cast<int>(i)));
            Polynomial rhs = d_of_generator(conj_[i]);
            if (!(lhs == rhs))
                throw InputError("differential does not commute with conjugation at '" +
                                 gens_[i].name + "'");
        }
    }
}

AlgebraPresentation AlgebraPresentation::extended(const std::vector<Generator>& extra,
                                                  std::vector<int>* old_to_new) const {
    std::vector<Generator> all = gens_;
    all.insert(all.end(), extra.begin(), extra.end());
    AlgebraPresentation out(field_, kind_, cutoff_, std::move(all));
    if (old_to_new) {
        old_to_new->assign(gens_.size(), -1);
        // Stable sort keeps the relative order of the original generators, so
        // matching by name is unambiguous and the map is increasing.
        for (size_t i = 0; i < gens_.size(); ++i)
            (*old_to_new)[i] = out.generator_index(gens_[i].name);
    }
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (!d_set_[i]) continue;
        std::vector<int> map(gens_.size());
        for (size_t k = 0; k < gens_.size(); ++k) map[k] = out.generator_index(gens_[k].name);
        out.set_d(out.generator_index(gens_[i].name), remap(d_[i], map, out));
    }
    return out;
}

Polynomial AlgebraPresentation::remap(const Polynomial& p, const std::vector<int>& old_to_new,
                                      const AlgebraPresentation& target) {
    for (size_t i = 1; i < old_to_new.size(); ++i)
        if (old_to_new[i] <= old_to_new[i - 1])
            throw InputError("remap requires an increasing index map");
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        Monomial nm = target.unit_monomial();
        nm.degree = m.degree;
        for (size_t i = 0; i < old_to_new.size(); ++i)
            nm.exps[static_cast<size_t>(old_to_new[i])] = m.exps[i];
        out.add(nm, c);
    }
    return out;
}

std::string AlgebraPresentation::monomial_str(const Monomial& m) const {
    if (m.is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!first) os << "*";
        os << gens_[i].name;
        if (m.exps[i] > 1) os << "^" << m.exps[i];
        first = false;
    }
    return os.str();
}

namespace {

// One printed term "coef*mono" with the sign stripped; coef is rational.
std::string term_str(const std::string& coef_abs, bool coef_is_one, bool imaginary,
                     const std::string& mono, bool mono_is_unit) {
    std::string out;
    if (mono_is_unit) {
        if (imaginary)
            out = coef_is_one ? "i" : coef_abs + "*i";
        else
            out = coef_abs;
    } else {
        if (imaginary)
            out = (coef_is_one ? std::string("i") : coef_abs + "*i") + "*" + mono;
        else
            out = coef_is_one ? mono : coef_abs + "*" + mono;
    }
    return out;
}

} // namespace

std::string AlgebraPresentation::poly_str(const Polynomial& p) const {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const mpq_class& q, bool imaginary, const Monomial& m) {
        if (sgn(q) == 0) return;
        mpq_class a = abs(q);
        std::string body =
            term_str(a.get_str(), a == 1, imaginary, monomial_str(m), m.is_unit());
        if (first) {
            if (sgn(q) < 0) os << "-";
            os << body;
            first = false;
        } else {
            os << (sgn(q) < 0 ? " - " : " + ") << body;
        }
    };
    for (const auto& [m, c] : p.terms()) {
        emit(c.re(), false, m);
        emit(c.im(), true, m);
    }
    return os.str();
}

AlgebraPresentation tensor(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    if (a.field() != b.field()) throw InputError("tensor: mismatched coefficient fields");
    if (a.kind() != b.kind()) throw InputError("tensor: mismatched grading kinds");
    const int cutoff = std::min(a.cutoff(), b.cutoff());

    auto renamed = [&](const std::string& name, bool left) -> std::string {
        bool in_a = a.generator_index(name) >= 0;
        bool in_b = b.generator_index(name) >= 0;
        if (in_a && in_b) return name + (left ? "_1" : "_2");
        return name;
    };

    std::vector<Generator> gens;
    for (const auto& g : a.generators()) {
        Generator ng = g;
        ng.name = renamed(g.name, true);
        if (!ng.conj_name.empty()) ng.conj_name = renamed(g.conj_name, true);
        gens.push_back(std::move(ng));
    }
    for (const auto& g : b.generators()) {
        Generator ng = g;
        ng.name = renamed(g.name, false);
        if (!ng.conj_name.empty()) ng.conj_name = renamed(g.conj_name, false);
        gens.push_back(std::move(ng));
    }
    AlgebraPresentation out(a.field(), a.kind(), cutoff, std::move(gens));

    std::vector<int> map_a(a.generator_count());
    for (int i = 0; i < a.generator_count(); ++i)
        map_a[static_cast<size_t>(i)] = out.generator_index(renamed(a.generator(i).name, true));
    std::vector<int> map_b(b.generator_count());
    for (int i = 0; i < b.generator_count(); ++i)
        map_b[static_cast<size_t>(i)] = out.generator_index(renamed(b.generator(i).name, false));

    for (int i = 0; i < a.generator_count(); ++i)
        out.set_d(map_a[static_cast<size_t>(i)],
                  AlgebraPresentation::remap(a.d_of_generator(i), map_a, out));
    for (int i = 0; i < b.generator_count(); ++i)
        out.set_d(map_b[static_cast<size_t>(i)],
                  AlgebraPresentation::remap(b.d_of_generator(i), map_b, out));
    return out;
}

} // namespace dga
