#include "dga/dsl.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dga/cohomology.hpp"

namespace dga {

namespace {

struct Token {
    enum Kind { Ident, Number, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals } kind;
    std::string text;
    int column = 0; // 1-based
};

bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

std::vector<Token> tokenize(const std::string& line, int lineno) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        int col = static_cast<int>(i) + 1;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '#') break;
        if (ident_start(c)) {
            size_t j = i;
            while (j < line.size() && ident_char(line[j])) ++j;
            out.push_back({Token::Ident, line.substr(i, j - i), col});
            i = j;
            continue;
        }
        if (c >= '0' && c <= '9') {
            size_t j = i;
            while (j < line.size() && line[j] >= '0' && line[j] <= '9') ++j;
            out.push_back({Token::Number, line.substr(i, j - i), col});
            i = j;
            continue;
        }
        // UTF-8 wedge sign as a product alias.
        if (c == '\xe2' && i + 2 < line.size() && line[i + 1] == '\x88' &&
            line[i + 2] == '\xa7') {
            out.push_back({Token::Star, "*", col});
            i += 3;
            continue;
        }
        Token::Kind k;
        switch (c) {
        case '+': k = Token::Plus; break;
        case '-': k = Token::Minus; break;
        case '*': k = Token::Star; break;
        case '/': k = Token::Slash; break;
        case '^': k = Token::Caret; break;
        case '(': k = Token::LParen; break;
        case ')': k = Token::RParen; break;
        case '=': k = Token::Equals; break;
        default:
            throw ParseError(lineno, col,
                             std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, std::string(1, c), col});
        ++i;
    }
    return out;
}

// Cursor over one line's tokens with expectation-naming errors.
struct Line {
    int lineno = 0;
    std::vector<Token> toks;
    size_t pos = 0;

    bool done() const { return pos >= toks.size(); }
    int here() const {
        return done() ? (toks.empty() ? 1 : toks.back().column + 1) : toks[pos].column;
    }
    [[noreturn]] void fail(const std::string& expected) const {
        std::string got = done() ? "end of line" : "'" + toks[pos].text + "'";
        throw ParseError(lineno, here(), "expected " + expected + ", got " + got);
    }
    const Token& peek() const {
        if (done()) fail("more input");
        return toks[pos];
    }
    Token take(Token::Kind k, const std::string& expected) {
        if (done() || toks[pos].kind != k) fail(expected);
        return toks[pos++];
    }
    std::string ident(const std::string& expected) { return take(Token::Ident, expected).text; }
    int integer(const std::string& expected) {
        bool neg = false;
        if (!done() && toks[pos].kind == Token::Minus) {
            neg = true;
            ++pos;
        }
        Token t = take(Token::Number, expected);
        try {
            int v = std::stoi(t.text);
            return neg ? -v : v;
        } catch (const std::exception&) {
            throw ParseError(lineno, t.column, "integer out of range");
        }
    }
    void keyword(const std::string& word) {
        if (done() || toks[pos].kind != Token::Ident || toks[pos].text != word)
            fail("'" + word + "'");
        ++pos;
    }
    void end() {
        if (!done()) fail("end of line");
    }
};

// Recursive-descent evaluation of a polynomial expression over `pres`.
struct ExprParser {
    const AlgebraPresentation& pres;
    Line& line;

    Polynomial constant(const Scalar& s) const {
        Polynomial p;
        if (s.is_zero()) return p;
        Monomial unit;
        unit.degree = 0;
        unit.exps.assign(static_cast<size_t>(pres.generator_count()), 0);
        p.add(unit, s);
        return p;
    }

    Polynomial factor() {
        if (line.done()) line.fail("a number, 'i', a generator name, or '('");
        const Token& t = line.peek();
        if (t.kind == Token::Number) {
            ++line.pos;
            mpz_class num(t.text, 10);
            if (!line.done() && line.toks[line.pos].kind == Token::Slash) {
                ++line.pos;
                Token den = line.take(Token::Number, "a denominator");
                mpz_class d(den.text, 10);
                if (d == 0) throw ParseError(line.lineno, den.column, "zero denominator");
                mpq_class q(num, d);
                q.canonicalize();
                return constant(Scalar(q));
            }
            return constant(Scalar(mpq_class(num)));
        }
        if (t.kind == Token::Ident) {
            ++line.pos;
            if (t.text == "i") {
                if (pres.field() != Field::QI)
                    throw ParseError(line.lineno, t.column,
                                     "the imaginary unit needs 'field Qi'");
                return constant(Scalar::i());
            }
            int idx = pres.generator_index(t.text);
            if (idx < 0)
                throw ParseError(line.lineno, t.column,
                                 "unknown generator '" + t.text + "'");
            Polynomial g = pres.generator_poly(idx);
            if (!line.done() && line.toks[line.pos].kind == Token::Caret) {
                ++line.pos;
                Token e = line.take(Token::Number, "an exponent");
                int k = 0;
                try {
                    k = std::stoi(e.text);
                } catch (const std::exception&) {
                    throw ParseError(line.lineno, e.column, "exponent out of range");
                }
                if (k < 1) throw ParseError(line.lineno, e.column, "exponent must be >= 1");
                return pres.pow(g, k);
            }
            return g;
        }
        if (t.kind == Token::LParen) {
            ++line.pos;
            Polynomial inner = expr();
            line.take(Token::RParen, "')'");
            return inner;
        }
        line.fail("a number, 'i', a generator name, or '('");
    }

    Polynomial term() {
        Polynomial p = factor();
        while (!line.done() && line.toks[line.pos].kind == Token::Star) {
            ++line.pos;
            p = pres.mul(p, factor());
        }
        return p;
    }

    Polynomial expr() {
        bool negate = false;
        if (!line.done() && line.toks[line.pos].kind == Token::Minus) {
            negate = true;
            ++line.pos;
        }
        Polynomial p = term();
        if (negate) p = p.scaled(Scalar(-1));
        while (!line.done() && (line.toks[line.pos].kind == Token::Plus ||
                                line.toks[line.pos].kind == Token::Minus)) {
            bool minus = line.toks[line.pos].kind == Token::Minus;
            ++line.pos;
            Polynomial t = term();
            if (minus)
                p -= t;
            else
                p += t;
        }
        return p;
    }
};

enum class FileMode { Unknown, Plain, Spec };

struct ParserState {
    ParseOptions opts;

    std::optional<Field> field;
    std::optional<int> cutoff;
    std::optional<GradingKind> kind;

    FileMode mode = FileMode::Unknown;
    std::vector<Generator> gens;
    std::vector<std::string> wreal, w10, w01;
    std::set<std::string> declared;

    std::optional<AlgebraPresentation> pres; // set once declarations freeze
    std::set<std::string> assigned;          // "d x" / "dbar z" keys
    std::vector<Polynomial> dw, dbar10, dbar01;

    std::optional<ExtensionBlock> ext;
    std::map<std::string, size_t> ext_index;

    std::map<std::string, int> weights;
    std::map<std::string, std::pair<int, int>> types;

    void declare_name(const std::string& name, int lineno, int col) {
        if (name == "i")
            throw ParseError(lineno, col, "'i' is reserved for the imaginary unit");
        if (!declared.insert(name).second)
            throw ParseError(lineno, col, "duplicate generator name '" + name + "'");
    }

    void require_declaring(Line& l) {
        if (pres)
            throw ParseError(l.lineno, 1, "declarations must precede assignments");
    }

    void set_mode(FileMode m, Line& l) {
        if (mode == FileMode::Unknown) mode = m;
        if (mode != m)
            throw ParseError(l.lineno, 1,
                             "files use either 'gen' or the 'base'/'wreal'/'wpair' forms, "
                             "not both");
    }

    Field effective_field() const { return opts.field ? *opts.field : *field; }
    int effective_cutoff() const { return opts.cutoff ? *opts.cutoff : *cutoff; }

    void freeze(Line& l) {
        if (pres) return;
        if (!field) throw ParseError(l.lineno, 1, "missing 'field' header line");
        if (!cutoff) throw ParseError(l.lineno, 1, "missing 'cutoff' header line");
        if (!kind) throw ParseError(l.lineno, 1, "missing 'grading' header line");
        try {
            pres.emplace(effective_field(), *kind, effective_cutoff(), gens);
        } catch (const InputError& e) {
            throw ParseError(l.lineno, 1, e.what());
        }
        for (int i = 0; i < pres->generator_count(); ++i) pres->set_d(i, Polynomial());
        dw.assign(wreal.size(), Polynomial());
        dbar10.assign(w10.size(), Polynomial());
        dbar01.assign(w01.size(), Polynomial());
    }

    Generator parse_generator(Line& l) {
        Generator g;
        Token name = l.take(Token::Ident, "a generator name");
        g.name = name.text;
        declare_name(g.name, l.lineno, name.column);
        std::string form = l.ident("'degree' or 'bidegree'");
        if (form == "degree") {
            if (*kind != GradingKind::Graded)
                l.fail("'bidegree' (bigraded files declare bidegrees)");
            g.degree = l.integer("a degree");
        } else if (form == "bidegree") {
            if (*kind == GradingKind::Graded)
                l.fail("'degree' (graded files declare degrees)");
            g.has_bidegree = true;
            g.p = l.integer("a holomorphic degree");
            g.q = l.integer("an antiholomorphic degree");
            g.degree = g.p + g.q;
        } else {
            --l.pos;
            l.fail("'degree' or 'bidegree'");
        }
        while (!l.done()) {
            std::string opt = l.ident("'cap' or 'conj'");
            if (opt == "cap") {
                g.power_cap = l.integer("a cap");
                if (g.power_cap < 1)
                    throw ParseError(l.lineno, l.here(), "cap must be >= 1");
            } else if (opt == "conj") {
                g.conj_name = l.ident("a conjugate generator name");
            } else {
                --l.pos;
                l.fail("'cap' or 'conj'");
            }
        }
        return g;
    }

    void check_homogeneous(const Polynomial& p, int degree, const std::string& name,
                           Line& l, int col) {
        for (const auto& [m, c] : p.terms()) {
            (void)c;
            if (m.degree != degree)
                throw ParseError(l.lineno, col,
                                 "the differential of '" + name + "' must be homogeneous of "
                                 "degree " + std::to_string(degree) + ", got a degree-" +
                                 std::to_string(m.degree) + " term");
        }
    }

    void handle_d(Line& l) {
        freeze(l);
        Token name = l.take(Token::Ident, "a generator name");
        l.take(Token::Equals, "'='");
        int expr_col = l.here();
        Polynomial rhs = ExprParser{*pres, l}.expr();
        l.end();
        if (!assigned.insert("d " + name.text).second)
            throw ParseError(l.lineno, name.column,
                             "duplicate differential for '" + name.text + "'");
        int idx = pres->generator_index(name.text);
        if (idx >= 0) {
            check_homogeneous(rhs, pres->generator(idx).degree + 1, name.text, l, expr_col);
            pres->set_d(idx, std::move(rhs));
            return;
        }
        for (size_t i = 0; i < wreal.size(); ++i)
            if (wreal[i] == name.text) {
                check_homogeneous(rhs, 2, name.text, l, expr_col);
                dw[i] = std::move(rhs);
                return;
            }
        for (const std::string& n : w10)
            if (n == name.text)
                throw ParseError(l.lineno, name.column,
                                 "complex extension directions take 'dbar', not 'd'");
        for (const std::string& n : w01)
            if (n == name.text)
                throw ParseError(l.lineno, name.column,
                                 "complex extension directions take 'dbar', not 'd'");
        auto it = ext_index.find(name.text);
        if (it != ext_index.end()) {
            check_homogeneous(rhs, ext->degree + 1, name.text, l, expr_col);
            ext->beta[it->second] = std::move(rhs);
            return;
        }
        throw ParseError(l.lineno, name.column, "unknown generator '" + name.text + "'");
    }

    void handle_dbar(Line& l) {
        freeze(l);
        Token name = l.take(Token::Ident, "a generator name");
        l.take(Token::Equals, "'='");
        int expr_col = l.here();
        Polynomial rhs = ExprParser{*pres, l}.expr();
        l.end();
        if (!assigned.insert("dbar " + name.text).second)
            throw ParseError(l.lineno, name.column,
                             "duplicate differential for '" + name.text + "'");
        for (size_t i = 0; i < w10.size(); ++i)
            if (w10[i] == name.text) {
                check_homogeneous(rhs, 2, name.text, l, expr_col);
                dbar10[i] = std::move(rhs);
                return;
            }
        for (size_t i = 0; i < w01.size(); ++i)
            if (w01[i] == name.text) {
                check_homogeneous(rhs, 2, name.text, l, expr_col);
                dbar01[i] = std::move(rhs);
                return;
            }
        throw ParseError(l.lineno, name.column,
                         "'dbar' assignments are only for complex extension directions");
    }

    void handle(Line& l) {
        std::string head = l.ident("a directive");
        if (head == "field") {
            if (field) throw ParseError(l.lineno, 1, "duplicate 'field' line");
            std::string v = l.ident("'Q' or 'Qi'");
            if (v == "Q")
                field = Field::Q;
            else if (v == "Qi")
                field = Field::QI;
            else {
                --l.pos;
                l.fail("'Q' or 'Qi'");
            }
            l.end();
        } else if (head == "cutoff") {
            if (cutoff) throw ParseError(l.lineno, 1, "duplicate 'cutoff' line");
            cutoff = l.integer("a cutoff");
            if (*cutoff < 1) throw ParseError(l.lineno, 1, "cutoff must be >= 1");
            l.end();
        } else if (head == "grading") {
            if (kind) throw ParseError(l.lineno, 1, "duplicate 'grading' line");
            std::string v = l.ident("'graded', 'bigraded', or 'dolbeault'");
            if (v == "graded")
                kind = GradingKind::Graded;
            else if (v == "bigraded")
                kind = GradingKind::Bigraded;
            else if (v == "dolbeault")
                kind = GradingKind::Dolbeault;
            else {
                --l.pos;
                l.fail("'graded', 'bigraded', or 'dolbeault'");
            }
            l.end();
        } else if (head == "gen" || head == "base") {
            require_declaring(l);
            if (!kind) throw ParseError(l.lineno, 1, "'grading' must precede declarations");
            set_mode(head == "gen" ? FileMode::Plain : FileMode::Spec, l);
            gens.push_back(parse_generator(l));
            l.end();
        } else if (head == "wreal") {
            require_declaring(l);
            set_mode(FileMode::Spec, l);
            Token first = l.take(Token::Ident, "a generator name");
            declare_name(first.text, l.lineno, first.column);
            wreal.push_back(first.text);
            while (!l.done()) {
                Token t = l.take(Token::Ident, "a generator name");
                declare_name(t.text, l.lineno, t.column);
                wreal.push_back(t.text);
            }
        } else if (head == "wpair") {
            require_declaring(l);
            set_mode(FileMode::Spec, l);
            Token a = l.take(Token::Ident, "a generator name");
            declare_name(a.text, l.lineno, a.column);
            Token b = l.take(Token::Ident, "a generator name");
            declare_name(b.text, l.lineno, b.column);
            w10.push_back(a.text);
            w01.push_back(b.text);
            l.end();
        } else if (head == "extend") {
            if (mode == FileMode::Spec)
                throw ParseError(l.lineno, 1, "extension blocks apply to 'gen' files");
            mode = FileMode::Plain;
            freeze(l);
            Token name = l.take(Token::Ident, "a generator name");
            declare_name(name.text, l.lineno, name.column);
            l.keyword("degree");
            int deg = l.integer("a degree");
            if (deg < 1) throw ParseError(l.lineno, 1, "extension degree must be >= 1");
            l.end();
            if (!ext) {
                ext.emplace();
                ext->degree = deg;
            } else if (ext->degree != deg) {
                throw ParseError(l.lineno, 1,
                                 "extension generators must share one degree (block uses " +
                                     std::to_string(ext->degree) + ")");
            }
            ext_index[name.text] = ext->names.size();
            ext->names.push_back(name.text);
            ext->beta.emplace_back();
        } else if (head == "d") {
            handle_d(l);
        } else if (head == "dbar") {
            handle_dbar(l);
        } else if (head == "weight" || head == "type") {
            if (mode == FileMode::Spec)
                throw ParseError(l.lineno, 1, "annotations apply to 'gen' files");
            mode = FileMode::Plain;
            freeze(l);
            Token name = l.take(Token::Ident, "a generator name");
            if (pres->generator_index(name.text) < 0)
                throw ParseError(l.lineno, name.column,
                                 "unknown generator '" + name.text + "'");
            if (head == "weight") {
                int w = l.integer("a weight");
                if (!weights.emplace(name.text, w).second)
                    throw ParseError(l.lineno, name.column,
                                     "duplicate weight for '" + name.text + "'");
            } else {
                int p = l.integer("a holomorphic degree");
                int q = l.integer("an antiholomorphic degree");
                if (!types.emplace(name.text, std::make_pair(p, q)).second)
                    throw ParseError(l.lineno, name.column,
                                     "duplicate type for '" + name.text + "'");
            }
            l.end();
        } else {
            throw ParseError(l.lineno, l.toks[0].column,
                             "unknown directive '" + head + "'; expected one of field, "
                             "cutoff, grading, gen, base, wreal, wpair, d, dbar, extend, "
                             "weight, type");
        }
    }

    PresentationFile finish() {
        Line eof;
        eof.lineno = 1;
        freeze(eof);
        PresentationFile out;
        if (mode == FileMode::Spec) {
            TransverseKahlerModelSpec s;
            s.h = std::move(*pres);
            s.w_real = std::move(wreal);
            s.d_w = std::move(dw);
            s.w10 = std::move(w10);
            s.w01 = std::move(w01);
            s.dbar_w10 = std::move(dbar10);
            s.dbar_w01 = std::move(dbar01);
            try {
                s.validate();
            } catch (const InputError& e) {
                throw ParseError(1, 1, e.what());
            }
            out.spec = std::move(s);
        } else {
            try {
                pres->validate();
            } catch (const InputError& e) {
                throw ParseError(1, 1, e.what());
            }
            out.presentation = std::move(*pres);
            out.extension = std::move(ext);
            out.weights = std::move(weights);
            out.types = std::move(types);
        }
        return out;
    }
};

void serialize_generator(std::ostringstream& os, const char* head, const Generator& g) {
    os << head << ' ' << g.name;
    if (g.has_bidegree)
        os << " bidegree " << g.p << ' ' << g.q;
    else
        os << " degree " << g.degree;
    if (g.power_cap > 0) os << " cap " << g.power_cap;
    if (!g.conj_name.empty()) os << " conj " << g.conj_name;
    os << '\n';
}

const char* grading_word(GradingKind k) {
    switch (k) {
    case GradingKind::Graded: return "graded";
    case GradingKind::Bigraded: return "bigraded";
    default: return "dolbeault";
    }
}

} // namespace

PresentationFile parse_presentation_file(const std::string& text, const ParseOptions& opts) {
    ParserState st;
    st.opts = opts;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        Line l;
        l.lineno = lineno;
        l.toks = tokenize(raw, lineno);
        if (l.toks.empty()) continue;
        if (l.toks[0].kind != Token::Ident)
            throw ParseError(lineno, l.toks[0].column, "expected a directive");
        st.handle(l);
    }
    return st.finish();
}

PresentationFile load_presentation_file(const std::string& path, const ParseOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_presentation_file(buf.str(), opts);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string serialize(const PresentationFile& f) {
    if (f.presentation.has_value() == f.spec.has_value())
        throw InputError("a presentation file holds exactly one of a presentation or a spec");
    const AlgebraPresentation& base = f.spec ? f.spec->h : *f.presentation;
    std::ostringstream os;
    os << "field " << (base.field() == Field::QI ? "Qi" : "Q") << '\n';
    os << "cutoff " << base.cutoff() << '\n';
    os << "grading " << grading_word(base.kind()) << '\n';
    for (const Generator& g : base.generators())
        serialize_generator(os, f.spec ? "base" : "gen", g);
    if (f.spec) {
        const TransverseKahlerModelSpec& s = *f.spec;
        for (const std::string& n : s.w_real) os << "wreal " << n << '\n';
        for (size_t i = 0; i < s.w10.size(); ++i)
            os << "wpair " << s.w10[i] << ' ' << s.w01[i] << '\n';
        for (int i = 0; i < base.generator_count(); ++i)
            os << "d " << base.generator(i).name << " = "
               << base.poly_str(base.d_of_generator(i)) << '\n';
        for (size_t i = 0; i < s.w_real.size(); ++i)
            os << "d " << s.w_real[i] << " = " << base.poly_str(s.d_w[i]) << '\n';
        for (size_t i = 0; i < s.w10.size(); ++i) {
            os << "dbar " << s.w10[i] << " = " << base.poly_str(s.dbar_w10[i]) << '\n';
            os << "dbar " << s.w01[i] << " = " << base.poly_str(s.dbar_w01[i]) << '\n';
        }
        return os.str();
    }
    for (int i = 0; i < base.generator_count(); ++i)
        os << "d " << base.generator(i).name << " = "
           << base.poly_str(base.d_of_generator(i)) << '\n';
    if (f.extension) {
        for (const std::string& n : f.extension->names)
            os << "extend " << n << " degree " << f.extension->degree << '\n';
        for (size_t i = 0; i < f.extension->names.size(); ++i)
            os << "d " << f.extension->names[i] << " = "
               << base.poly_str(f.extension->beta[i]) << '\n';
    }
    for (const auto& [name, w] : f.weights) os << "weight " << name << ' ' << w << '\n';
    for (const auto& [name, pq] : f.types)
        os << "type " << name << ' ' << pq.first << ' ' << pq.second << '\n';
    return os.str();
}

bool files_equal(const PresentationFile& a, const PresentationFile& b) {
    if (a.presentation.has_value() != b.presentation.has_value()) return false;
    if (a.spec.has_value() != b.spec.has_value()) return false;
    if (a.presentation && !structurally_equal(*a.presentation, *b.presentation)) return false;
    if (a.spec) {
        const TransverseKahlerModelSpec& x = *a.spec;
        const TransverseKahlerModelSpec& y = *b.spec;
        if (!structurally_equal(x.h, y.h)) return false;
        if (x.w_real != y.w_real || x.w10 != y.w10 || x.w01 != y.w01) return false;
        if (x.d_w != y.d_w || x.dbar_w10 != y.dbar_w10 || x.dbar_w01 != y.dbar_w01)
            return false;
    }
    if (a.extension.has_value() != b.extension.has_value()) return false;
    if (a.extension) {
        if (a.extension->degree != b.extension->degree) return false;
        if (a.extension->names != b.extension->names) return false;
        if (a.extension->beta != b.extension->beta) return false;
    }
    return a.weights == b.weights && a.types == b.types;
}

} // namespace dga
