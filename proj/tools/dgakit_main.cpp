// dgakit: command-line surface over the dga library. One subcommand per
// library computation; human-readable tables on stdout, a structured result
// document behind --structured. Exit codes: 0 computed, 1 check verdict
// failed, 2 input error, 3 resource/cutoff error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dga/cohomology.hpp"
#include "dga/corpus.hpp"
#include "dga/dolbeault.hpp"
#include "dga/dsl.hpp"
#include "dga/errors.hpp"
#include "dga/filtered.hpp"
#include "dga/hirsch.hpp"
#include "dga/hodge.hpp"
#include "dga/sullivan.hpp"

using json = nlohmann::ordered_json;
using namespace dga;

namespace {

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Accumulates both output forms; exactly one is printed at the end.
struct Result {
    bool structured = false;
    std::ostringstream text;
    json doc;

    Result(const std::string& command, bool structured_) : structured(structured_) {
        doc["schema"] = "dgakit-result/1";
        doc["command"] = command;
        doc["inputs"] = json::array();
        doc["tables"] = json::object();
        doc["verdicts"] = json::object();
        doc["witnesses"] = json::object();
        doc["notes"] = json::array();
    }

    void note(const std::string& s) {
        doc["notes"].push_back(s);
        text << "# " << s << '\n';
    }

    int finish(int code) {
        if (structured)
            std::cout << doc.dump(2) << '\n';
        else
            std::cout << text.str();
        return code;
    }
};

struct Input {
    std::string path;
    std::string digest;
    PresentationFile file;
};

Input load_input(const std::string& path, const ParseOptions& opts, Result& res) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    Input out;
    out.path = path;
    out.digest = fnv1a_hex(buf.str());
    res.doc["inputs"].push_back(json{{"path", path}, {"digest", out.digest}});
    try {
        out.file = parse_presentation_file(buf.str(), opts);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
    return out;
}

// The real (de Rham type) model behind a file of either shape.
AlgebraPresentation real_model(const Input& in) {
    if (in.file.spec) return build_de_rham_model(*in.file.spec);
    return *in.file.presentation;
}

json dims_json(const std::vector<Index>& dims) {
    json a = json::array();
    for (Index d : dims) a.push_back(d);
    return a;
}

void print_dims(Result& res, const std::string& symbol, const std::vector<Index>& dims) {
    for (size_t n = 0; n < dims.size(); ++n)
        res.text << symbol << '^' << n << " = " << dims[n] << '\n';
}

void emit_bigraded(Result& res, const std::string& key, const BigradedCohomologyTable& t) {
    json rows = json::array();
    for (const auto& [pq, slot] : t.slots()) {
        if (slot.dim() == 0) continue;
        rows.push_back(json::array({pq.first, pq.second, slot.dim()}));
        res.text << "h^{" << pq.first << ',' << pq.second << "} = " << slot.dim() << '\n';
    }
    res.doc["tables"][key] = rows;
}

void emit_verdict(Result& res, const std::string& key, bool ok) {
    res.doc["verdicts"][key] = ok;
    res.text << key << ": " << (ok ? "PASS" : "FAIL") << '\n';
}

std::string totals_line(const std::vector<Index>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

// Serialized model output doubles as a loadable presentation file.
void emit_model(Result& res, const AlgebraPresentation& model, int certified_up_to) {
    PresentationFile pf;
    pf.presentation = model;
    std::string text = serialize(pf);
    res.note("certified up to degree " + std::to_string(certified_up_to));
    res.text << text;
    res.doc["tables"]["certified_up_to"] = certified_up_to;
    res.doc["witnesses"]["model"] = text;
}

const TransverseKahlerModelSpec& require_spec(const Input& in, const std::string& cmd) {
    if (!in.file.spec)
        throw InputError(in.path + ": the " + cmd +
                         " command needs a structured model file ('base'/'wreal'/'wpair')");
    return *in.file.spec;
}

const AlgebraPresentation& require_plain(const Input& in, const std::string& cmd) {
    if (!in.file.presentation)
        throw InputError(in.path + ": the " + cmd +
                         " command needs a plain presentation file ('gen' lines)");
    return *in.file.presentation;
}

int cmd_cohomology(const Input& in, Result& res) {
    std::vector<Index> dims = cohomology(real_model(in)).dims();
    print_dims(res, "H", dims);
    res.doc["tables"]["cohomology"] = dims_json(dims);
    return res.finish(0);
}

int cmd_dolbeault(const Input& in, Result& res) {
    BigradedCohomologyTable t = in.file.spec
                                    ? dolbeault_cohomology(build_dolbeault_model(*in.file.spec))
                                    : dolbeault_cohomology(*in.file.presentation);
    emit_bigraded(res, "dolbeault", t);
    return res.finish(0);
}

int cmd_minimal_model(const Input& in, Result& res, int up_to) {
    MinimalModel mm = minimal_model(real_model(in), up_to);
    emit_model(res, mm.model, mm.certified_up_to);
    return res.finish(0);
}

int cmd_one_minimal(const Input& in, Result& res, int stages) {
    MinimalModel mm = one_minimal_model(real_model(in), stages);
    res.note("stages: " + std::to_string(stages));
    emit_model(res, mm.model, mm.certified_up_to);
    return res.finish(0);
}

int cmd_hirsch(const Input& in, Result& res) {
    const AlgebraPresentation& base = require_plain(in, "hirsch");
    if (!in.file.extension)
        throw InputError(in.path + ": the hirsch command needs an extension block "
                                   "('extend' lines)");
    HirschData h;
    h.base = base;
    h.degree = in.file.extension->degree;
    h.names = in.file.extension->names;
    h.beta = in.file.extension->beta;
    validate_hirsch_data(h);
    HirschSpectralResult r = weight_spectral_sequence(h);
    const int top = r.extension.cutoff();
    json pages = json::array();
    for (const SpectralPage& page : r.pages) {
        std::vector<Index> totals;
        for (int n = 0; n < top; ++n) totals.push_back(page.total(n));
        res.text << "E_" << page.r << " totals: " << totals_line(totals) << '\n';
        pages.push_back(json{{"page", page.r}, {"totals", dims_json(totals)}});
    }
    res.doc["tables"]["pages"] = pages;
    res.text << "H totals:   " << totals_line(r.degeneration.h_dims) << '\n';
    res.doc["tables"]["h_dims"] = dims_json(r.degeneration.h_dims);
    res.doc["tables"]["page_totals"] = dims_json(r.degeneration.page_totals);
    if (h.degree == 1) {
        // Closed form for the second page of a degree-1 extension:
        // dim E_2^{p,q} = dim H^p(base) * C(#V, q).
        std::vector<Index> hb = cohomology(h.base).dims();
        const int nv = static_cast<int>(h.names.size());
        auto binom = [](int n, int j) {
            Index b = 1;
            for (int t = 1; t <= j; ++t) b = b * (n - t + 1) / t;
            return b;
        };
        bool identified = true;
        const SpectralPage& e2 = r.pages.back();
        for (int p = 0; p < static_cast<int>(hb.size()); ++p)
            for (int q = 0; q <= nv; ++q) {
                if (p + q >= top) continue;
                if (e2.dim(p, q) != hb[static_cast<size_t>(p)] * binom(nv, q))
                    identified = false;
            }
        emit_verdict(res, "page_two_identified", identified);
    }
    if (!r.degeneration.degenerate) {
        json act = json::array();
        for (int n : r.degeneration.active_degrees) act.push_back(n);
        res.doc["witnesses"]["active_degrees"] = act;
    }
    emit_verdict(res, "degenerate", r.degeneration.degenerate);
    return res.finish(r.degeneration.degenerate ? 0 : 1);
}

int cmd_ddbar(const Input& in, Result& res) {
    DdbarReport r = in.file.spec ? ddbar_check(build_tot_model(*in.file.spec))
                                 : ddbar_check(*in.file.presentation);
    json rows = json::array();
    for (const DdbarDegree& d : r.degrees) {
        res.text << "degree " << d.degree << ": closed-exact " << d.dim_closed_exact
                 << ", del-dbar-exact " << d.dim_del_dbar << (d.ok ? "" : "  <- FAIL")
                 << '\n';
        rows.push_back(json::array({d.degree, d.dim_closed_exact, d.dim_del_dbar}));
    }
    res.doc["tables"]["closed_exact_vs_del_dbar"] = rows;
    if (!r.overall) {
        res.text << "first failure in degree " << r.first_failure_degree << '\n';
        res.doc["tables"]["first_failure_degree"] = r.first_failure_degree;
        res.doc["witnesses"]["failure"] = r.witness;
        if (!r.witness.empty()) res.text << "witness: " << r.witness << '\n';
    }
    emit_verdict(res, "ddbar", r.overall);
    return res.finish(r.overall ? 0 : 1);
}

void emit_bigrading_rows(Result& res, json& rows, const std::string& label, int degree,
                         const Bigrading& b) {
    res.text << label << '^' << degree << ':';
    bool any = false;
    for (const auto& pq : b.nonzero_slots()) {
        res.text << " (" << pq.first << ',' << pq.second << ")=" << b.dim(pq.first, pq.second);
        rows.push_back(
            json::array({degree, pq.first, pq.second, b.dim(pq.first, pq.second)}));
        any = true;
    }
    if (!any) res.text << " 0";
    res.text << '\n';
}

int cmd_bigrading(const Input& in, Result& res) {
    json rows = json::array();
    if (in.file.spec) {
        ModelFiltrations mf = model_filtrations(*in.file.spec);
        for (const DegreeMixedHodge& dm : mf.cohomology)
            emit_bigrading_rows(res, rows, "H", dm.degree, dm.bigrading);
        res.doc["tables"]["bigrading"] = rows;
        emit_verdict(res, "weight_page_zero_trivial", mf.d0_trivial);
        emit_verdict(res, "weight_page_one_identified", mf.e1_identified);
        return res.finish(0);
    }
    // Plain files: bigrade each degree slice of the algebra itself from the
    // per-generator weight/type annotations.
    const AlgebraPresentation& p = require_plain(in, "bigrading");
    for (const Generator& g : p.generators()) {
        if (!in.file.weights.count(g.name) || !in.file.types.count(g.name))
            throw InputError(in.path + ": generator '" + g.name +
                             "' needs 'weight' and 'type' annotation lines");
    }
    for (int n = 0; n < p.cutoff(); ++n) {
        const std::vector<Monomial>& basis = p.basis(n);
        const Index dim = static_cast<Index>(basis.size());
        if (dim == 0) continue;
        std::vector<int> wlevel(basis.size(), 0), tlevel(basis.size(), 0);
        for (size_t m = 0; m < basis.size(); ++m) {
            for (int g = 0; g < p.generator_count(); ++g) {
                int e = basis[m].exps[static_cast<size_t>(g)];
                if (e == 0) continue;
                wlevel[m] += e * in.file.weights.at(p.generator(g).name);
                tlevel[m] += e * in.file.types.at(p.generator(g).name).first;
            }
        }
        auto span_where = [&](auto&& keep) {
            Mat rows_m(dim, dim);
            rows_m.setZero();
            Index count = 0;
            for (size_t m = 0; m < basis.size(); ++m)
                if (keep(m)) rows_m(count++, static_cast<Index>(m)) = Scalar(1);
            return Subspace::span_of_rows(rows_m.topRows(count), dim);
        };
        Filtration w(FiltrationDirection::Increasing, dim);
        int wlo = *std::min_element(wlevel.begin(), wlevel.end());
        int whi = *std::max_element(wlevel.begin(), wlevel.end());
        for (int l = wlo; l <= whi; ++l)
            w.set_level(l, span_where([&](size_t m) { return wlevel[m] <= l; }));
        Filtration f(FiltrationDirection::Decreasing, dim);
        int tlo = *std::min_element(tlevel.begin(), tlevel.end());
        int thi = *std::max_element(tlevel.begin(), tlevel.end());
        for (int l = tlo; l <= thi; ++l)
            f.set_level(l, span_where([&](size_t m) { return tlevel[m] >= l; }));
        Bigrading b = canonical_bigrading(w, f, degree_conjugation(p, n));
        emit_bigrading_rows(res, rows, "C", n, b);
    }
    res.doc["tables"]["bigrading"] = rows;
    return res.finish(0);
}

int cmd_fundamental(const Input& in, Result& res) {
    const TransverseKahlerModelSpec& s = require_spec(in, "fundamental-check");
    FundamentalityReport r = is_fundamental(s);
    if (!r.fundamental) {
        res.text << "offending generator: " << r.witness << '\n';
        res.text << "stray component: " << s.h.poly_str(r.stray) << '\n';
        res.doc["witnesses"]["generator"] = r.witness;
        res.doc["witnesses"]["stray"] = s.h.poly_str(r.stray);
    }
    emit_verdict(res, "fundamental", r.fundamental);
    return res.finish(r.fundamental ? 0 : 1);
}

int cmd_weight_count(const Input& in, Result& res, int n, int k, int up_to) {
    const TransverseKahlerModelSpec& s = require_spec(in, "weight-count");
    MinimalModel mm = minimal_model(build_tot_model(s), up_to);
    BigradedModelReport bm = bigraded_minimal_model(mm, s);
    if (!bm.ok) {
        res.text << "bidegree certification failed: "
                 << (bm.obstruction.empty() ? "image check failed" : bm.obstruction) << '\n';
        res.doc["witnesses"]["obstruction"] = bm.obstruction;
        emit_verdict(res, "weight_count", false);
        return res.finish(1);
    }
    WeightCountReport wc = weight_count_check(mm.model, generator_types(bm), n, k);
    json mult = json::array();
    for (const auto& [w, m] : wc.multiplicities) {
        res.text << "weight " << w << ": " << m << '\n';
        mult.push_back(json::array({w, m}));
    }
    res.doc["tables"]["multiplicities"] = mult;
    res.text << "total = " << wc.total << " (expected " << 2 * n << ")\n";
    res.text << "weighted total = " << wc.weighted << " (expected " << 2 * n + 2 * k << ")\n";
    res.doc["tables"]["total"] = wc.total;
    res.doc["tables"]["weighted"] = wc.weighted;
    if (k == 1) {
        res.text << "dichotomy branch: " << wc.dichotomy_branch << '\n';
        res.doc["tables"]["dichotomy_branch"] = wc.dichotomy_branch;
    }
    emit_verdict(res, "weight_count", wc.ok);
    return res.finish(wc.ok ? 0 : 1);
}

int cmd_dual_lie(const Input& in, Result& res) {
    AlgebraPresentation model(Field::Q, GradingKind::Graded, 2, {});
    std::map<std::string, std::pair<int, int>> types;
    if (in.file.spec) {
        // Structured input: build the one-minimal model of the total algebra
        // and read the generator types off its certified bigrading.
        const TransverseKahlerModelSpec& s = *in.file.spec;
        MinimalModel mm = one_minimal_model(build_tot_model(s), 8);
        BigradedModelReport bm = bigraded_minimal_model(mm, s);
        types = generator_types(bm);
        model = mm.model;
    } else {
        model = *in.file.presentation;
        types = in.file.types;
        if (types.empty()) {
            for (const Generator& g : model.generators()) {
                if (!g.has_bidegree)
                    throw InputError(in.path + ": generator '" + g.name +
                                     "' needs a 'type' annotation or a declared bidegree");
                types[g.name] = {g.p, g.q};
            }
        }
    }
    BigradedLiePresentation r = dual_lie_presentation(model, types);
    json gens = json::array();
    for (const LieGenerator& g : r.generators) {
        res.text << "generator " << g.name << " (" << g.p << ',' << g.q << ")\n";
        gens.push_back(json{{"name", g.name}, {"p", g.p}, {"q", g.q}});
    }
    res.doc["tables"]["generators"] = gens;
    json rels = json::array();
    for (const LieRelation& rel : r.relations) {
        std::ostringstream bracket;
        bool first = true;
        for (Index t = 0; t < rel.bracket.size(); ++t) {
            if (rel.bracket(t).is_zero()) continue;
            bracket << (first ? "" : " + ") << rel.bracket(t).str() << '*'
                    << r.generators[static_cast<size_t>(t)].name;
            first = false;
        }
        if (first) bracket << '0';
        res.text << '[' << r.generators[static_cast<size_t>(rel.i)].name << ", "
                 << r.generators[static_cast<size_t>(rel.j)].name << "] = " << bracket.str()
                 << "  (" << rel.p << ',' << rel.q << ')'
                 << (rel.allowed ? "" : "  <- disallowed type") << '\n';
        rels.push_back(json{{"i", rel.i},
                            {"j", rel.j},
                            {"p", rel.p},
                            {"q", rel.q},
                            {"bracket", bracket.str()},
                            {"allowed", rel.allowed}});
    }
    res.doc["tables"]["relations"] = rels;
    if (!r.ok && !r.relation_types_ok) {
        res.text << "offending relation type: (" << r.offending.first << ','
                 << r.offending.second << ")\n";
        res.doc["witnesses"]["offending_type"] =
            json::array({r.offending.first, r.offending.second});
    }
    emit_verdict(res, "generator_types", r.generator_types_ok);
    emit_verdict(res, "relation_types", r.relation_types_ok);
    emit_verdict(res, "dual_lie", r.ok);
    return res.finish(r.ok ? 0 : 1);
}

int cmd_kunneth(const Input& a, const Input& b, Result& res) {
    KunnethReport r = kunneth_check(real_model(a), real_model(b));
    json rows = json::array();
    for (size_t n = 0; n < r.product_dims.size(); ++n) {
        res.text << "H^" << n << ": product " << r.product_dims[n] << ", convolution "
                 << r.convolution_dims[n] << '\n';
        rows.push_back(json::array({static_cast<int>(n), r.product_dims[n],
                                    r.convolution_dims[n]}));
    }
    res.doc["tables"]["product_vs_convolution"] = rows;
    emit_verdict(res, "kunneth", r.ok);
    return res.finish(r.ok ? 0 : 1);
}

int cmd_corpus(Result& res) {
    bool all_ok = true;
    json rows = json::array();
    for (const CorpusEntry& e : corpus_entries()) {
        CorpusReport rep = run_entry(e);
        all_ok = all_ok && rep.ok;
        json checks = json::array();
        for (const CorpusCheck& c : rep.checks)
            checks.push_back(json{{"label", c.label}, {"ok", c.ok}, {"detail", c.detail}});
        rows.push_back(json{{"name", rep.name}, {"ok", rep.ok}, {"checks", checks}});
        if (rep.ok) {
            res.text << rep.name << ": pass (" << rep.checks.size() << " checks)\n";
        } else {
            res.text << rep.name << ": FAIL\n";
            for (const CorpusCheck& c : rep.checks)
                if (!c.ok) res.text << "  " << c.label << ": " << c.detail << '\n';
        }
    }
    res.doc["tables"]["entries"] = rows;
    emit_verdict(res, "corpus", all_ok);
    return res.finish(all_ok ? 0 : 1);
}

struct CommonOpts {
    std::string path;
    std::optional<int> cutoff;
    std::string field;
    bool structured = false;

    ParseOptions parse_options() const {
        ParseOptions o;
        o.cutoff = cutoff;
        if (field == "Q") o.field = Field::Q;
        if (field == "Qi") o.field = Field::QI;
        return o;
    }
};

// Registers FILE, --cutoff, --field, --structured on a subcommand.
void add_common(CLI::App* sub, CommonOpts& o) {
    sub->add_option("file", o.path, "presentation file")->required();
    sub->add_option("--cutoff", o.cutoff, "override the header cutoff");
    sub->add_option("--field", o.field, "override the header field")
        ->check(CLI::IsMember({"Q", "Qi"}));
    sub->add_flag("--structured", o.structured, "print a structured result document");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology of graded and bigraded differential algebras"};
    app.require_subcommand(1);
    int code = 0;

    auto simple = [&](const std::string& name, const std::string& desc, auto run) {
        auto opts = std::make_shared<CommonOpts>();
        CLI::App* sub = app.add_subcommand(name, desc);
        add_common(sub, *opts);
        sub->callback([&code, name, opts, run] {
            Result res(name, opts->structured);
            Input in = load_input(opts->path, opts->parse_options(), res);
            code = run(in, res);
        });
        return sub;
    };

    simple("cohomology", "cohomology dimensions of the (real) model", cmd_cohomology);
    simple("dolbeault", "antiholomorphic bigraded cohomology table", cmd_dolbeault);
    simple("hirsch", "spectral sequence of a degree-1 extension block", cmd_hirsch);
    simple("ddbar-check", "two-differential exactness comparison", cmd_ddbar);
    simple("bigrading", "canonical bigrading of the weight/type filtrations",
           cmd_bigrading);
    simple("fundamental-check", "extension differentials land in bidegree (1,1)",
           cmd_fundamental);
    simple("dual-lie", "dualize a bigraded one-minimal presentation", cmd_dual_lie);

    {
        auto opts = std::make_shared<CommonOpts>();
        auto up_to = std::make_shared<int>(2);
        CLI::App* sub = app.add_subcommand("minimal-model", "minimal Sullivan model");
        add_common(sub, *opts);
        sub->add_option("--up-to", *up_to, "certify through this degree")
            ->default_val(2);
        sub->callback([&code, opts, up_to] {
            Result res("minimal-model", opts->structured);
            Input in = load_input(opts->path, opts->parse_options(), res);
            code = cmd_minimal_model(in, res, *up_to);
        });
    }
    {
        auto opts = std::make_shared<CommonOpts>();
        auto stages = std::make_shared<int>(8);
        CLI::App* sub = app.add_subcommand("one-minimal", "staged 1-minimal model");
        add_common(sub, *opts);
        sub->add_option("--stages", *stages, "number of tower stages")->default_val(8);
        sub->callback([&code, opts, stages] {
            Result res("one-minimal", opts->structured);
            Input in = load_input(opts->path, opts->parse_options(), res);
            code = cmd_one_minimal(in, res, *stages);
        });
    }
    {
        auto opts = std::make_shared<CommonOpts>();
        auto n = std::make_shared<int>(0);
        auto k = std::make_shared<int>(1);
        auto up_to = std::make_shared<int>(2);
        CLI::App* sub =
            app.add_subcommand("weight-count", "degree-1 weight multiplicity count");
        add_common(sub, *opts);
        sub->add_option("--n", *n, "half the real extension rank plus base half-dimension")
            ->required();
        sub->add_option("--k", *k, "complex extension rank")->default_val(1);
        sub->add_option("--up-to", *up_to, "certification degree of the minimal model")
            ->default_val(2);
        sub->callback([&code, opts, n, k, up_to] {
            Result res("weight-count", opts->structured);
            Input in = load_input(opts->path, opts->parse_options(), res);
            code = cmd_weight_count(in, res, *n, *k, *up_to);
        });
    }
    {
        auto opts = std::make_shared<CommonOpts>();
        auto second = std::make_shared<std::string>();
        CLI::App* sub = app.add_subcommand("kunneth", "cohomology of a tensor product "
                                                      "against the factor convolution");
        sub->add_option("file", opts->path, "first presentation file")->required();
        sub->add_option("file_b", *second, "second presentation file")->required();
        sub->add_option("--cutoff", opts->cutoff, "override the header cutoffs");
        sub->add_option("--field", opts->field, "override the header fields")
            ->check(CLI::IsMember({"Q", "Qi"}));
        sub->add_flag("--structured", opts->structured,
                      "print a structured result document");
        sub->callback([&code, opts, second] {
            Result res("kunneth", opts->structured);
            Input a = load_input(opts->path, opts->parse_options(), res);
            Input b = load_input(*second, opts->parse_options(), res);
            code = cmd_kunneth(a, b, res);
        });
    }
    {
        auto structured = std::make_shared<bool>(false);
        CLI::App* sub = app.add_subcommand("corpus", "run every built-in reference model");
        sub->add_flag("--structured", *structured, "print a structured result document");
        sub->callback([&code, structured] {
            Result res("corpus", *structured);
            code = cmd_corpus(res);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const CutoffError& e) {
        std::cerr << "dgakit: " << e.what() << '\n';
        return 3;
    } catch (const InputError& e) {
        std::cerr << "dgakit: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "dgakit: internal error: " << e.what() << '\n';
        return 2;
    }
    return code;
}
