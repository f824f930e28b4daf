#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dga/dolbeault.hpp"
#include "dga/errors.hpp"
#include "dga/gca.hpp"

namespace dga {

// Input failure with a source position (1-based line and column).
class ParseError : public InputError {
  public:
    ParseError(int line, int column, const std::string& what)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": " + what),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

// A block of fresh degree-k generators with prescribed cocycle images,
// declared after the presentation proper with `extend <name> degree <k>`
// lines followed by `d <name> = <expr>` assignments over the base.
struct ExtensionBlock {
    int degree = 1;
    std::vector<std::string> names;
    std::vector<Polynomial> beta;
};

// Parsed content of one presentation file. Exactly one of `presentation`
// (files built from `gen` lines) and `spec` (files with `base` / `wreal` /
// `wpair` structure) is set. `weights` / `types` hold the per-generator
// annotation lines of a plain presentation file.
struct PresentationFile {
    std::optional<AlgebraPresentation> presentation;
    std::optional<TransverseKahlerModelSpec> spec;
    std::optional<ExtensionBlock> extension;
    std::map<std::string, int> weights;
    std::map<std::string, std::pair<int, int>> types;
};

struct ParseOptions {
    std::optional<int> cutoff;  // override the header cutoff
    std::optional<Field> field; // override the header field
};

// Line-oriented grammar, `#` comments, blank lines ignored:
//
//   field Q | field Qi
//   cutoff <n>
//   grading graded | grading bigraded
//   gen  <name> degree <d> [cap <k>]
//   gen  <name> bidegree <p> <q> [cap <k>] [conj <name>]
//   base <name> ...                      (same forms as gen; starts a spec)
//   wreal <name> [<name> ...]            (real extension directions)
//   wpair <name> <name>                  (a (1,0)/(0,1) extension pair)
//   d    <name> = <expr>
//   dbar <name> = <expr>                 (complex extension directions only)
//   extend <name> degree <k>
//   weight <name> <w>
//   type   <name> <p> <q>
//
// Expressions: `+`/`-` sums of `*` products of factors; a factor is an
// integer, a fraction `a/b`, the imaginary unit `i`, a generator name with
// an optional `^<k>` power, or a parenthesized expression. All three header
// lines are required and precede the declarations; declarations precede
// assignments; every unassigned differential defaults to zero. Violations
// throw ParseError with the offending position.
PresentationFile parse_presentation_file(const std::string& text,
                                         const ParseOptions& opts = {});

// Reads and parses a file; prefixes diagnostics with the path.
PresentationFile load_presentation_file(const std::string& path,
                                        const ParseOptions& opts = {});

// Canonical text form: header, generators in canonical order, differentials
// in the same order, extension block, annotations. serialize(parse(text))
// reparses to an equal file, and serializing that reparse reproduces the
// text byte for byte.
std::string serialize(const PresentationFile& f);

// Equality of the mathematical content (presentations compared structurally,
// specs field by field, annotations exactly).
bool files_equal(const PresentationFile& a, const PresentationFile& b);

} // namespace dga
