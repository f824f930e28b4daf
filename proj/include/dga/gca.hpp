#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dga/subspace.hpp"

namespace dga {

// How a presentation's bigrading (if any) interacts with the differential.
//   Graded:    single grading; bidegree annotations, when present, are
//              weight/type metadata and do not constrain d.
//   Bigraded:  bidegrees sum to the degree; d splits as del + dbar with
//              types (1,0) and (0,1).
//   Dolbeault: bidegrees sum to the degree; d itself has type (0,1).
//   Split:     bidegrees are independent of the degree (weight p+q); d
//              preserves (p,q) exactly.
enum class GradingKind { Graded, Bigraded, Dolbeault, Split };

// Role annotation for model-shaped presentations: H marks the finite
// cohomology-type subring, W the degree-1 extension generators.
enum class Part { None, H, W };

struct Generator {
    std::string name;
    int degree = 0;
    bool has_bidegree = false;
    int p = 0, q = 0;
    int power_cap = 0; // 0 = free; k > 0 realizes g^(k+1) = 0 (even generators)
    std::string conj_name; // empty = no declared conjugate partner
    Part part = Part::None;
};

// Exponent vector over the presentation's canonical generator order, with the
// total degree cached so monomials order themselves: by degree, then
// word-lexicographically (a*b precedes a*c precedes b*c).
struct Monomial {
    int degree = 0;
    std::vector<int> exps;

    bool is_unit() const;
    int word_length() const;
    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial& o) const;
};

// Formal linear combination of monomials with exact scalar coefficients.
class Polynomial {
  public:
    bool is_zero() const { return terms_.empty(); }
    void add(const Monomial& m, const Scalar& c);
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial scaled(const Scalar& c) const;
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }

  private:
    std::map<Monomial, Scalar> terms_;
};

// A finitely generated free graded-commutative algebra presentation with
// differential, degree cutoff, optional bigrading, optional power caps
// (monomial truncation), and optional conjugation involution.
//
// Generators are kept in canonical order: stable-sorted by degree over the
// declaration order. All exponent vectors use canonical indices.
class AlgebraPresentation {
  public:
    // Empty placeholder (ground field, cutoff 0); fails validate().
    AlgebraPresentation() = default;
    AlgebraPresentation(Field field, GradingKind kind, int cutoff,
                        std::vector<Generator> generators);

    Field field() const { return field_; }
    GradingKind kind() const { return kind_; }
    int cutoff() const { return cutoff_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }
    const Generator& generator(int i) const { return gens_[static_cast<size_t>(i)]; }
    const std::vector<Generator>& generators() const { return gens_; }
    int generator_index(const std::string& name) const; // -1 if absent
    int conj_index(int i) const { return conj_[static_cast<size_t>(i)]; }
    bool has_conjugation() const;

    // Differential assignment; must be set for every generator before use.
    void set_d(const std::string& gen_name, Polynomial value);
    void set_d(int index, Polynomial value);
    const Polynomial& d_of_generator(int index) const;

    // Structural and differential validation; throws InputError on failure.
    // Checks: grading/bidegree consistency, field mode, conjugation
    // involution, Leibniz degree bookkeeping, and d^2 = 0 on every generator.
    void validate() const;

    // --- monomial and polynomial arithmetic ---
    Monomial unit_monomial() const;
    Monomial generator_monomial(int index) const;
    Polynomial generator_poly(int index, const Scalar& c = Scalar(1)) const;
    Polynomial generator_poly(const std::string& name, const Scalar& c = Scalar(1)) const;
    Polynomial unit_poly(const Scalar& c = Scalar(1)) const;

    int degree_of(const Monomial& m) const { return m.degree; }
    std::pair<int, int> bidegree_of(const Monomial& m) const;
    bool is_homogeneous(const Polynomial& p, int* degree_out = nullptr) const;

    // Product with Koszul signs and power-cap truncation.
    Polynomial mul(const Polynomial& a, const Polynomial& b) const;
    Polynomial pow(const Polynomial& a, int k) const;

    Polynomial d(const Polynomial& p) const;
    Polynomial del(const Polynomial& p) const;  // (1,0)-component (Bigraded); zero for Dolbeault
    Polynomial dbar(const Polynomial& p) const; // (0,1)-component; equals d for Dolbeault

    // Conjugation induced by the generator involution and scalar conjugation.
    Polynomial conj(const Polynomial& p) const;

    // --- degree slices ---
    // Monomial basis of the degree-n slice, ordered; n must lie in [0, cutoff].
    const std::vector<Monomial>& basis(int n) const;
    Index basis_dim(int n) const { return static_cast<Index>(basis(n).size()); }
    int basis_position(const Monomial& m) const; // position within basis(degree)

    // Positions within basis(p+q) (Bigraded/Dolbeault) or basis(n) (Split,
    // explicit n) of the monomials of bidegree (p, q).
    std::vector<int> type_positions(int n, int p, int q) const;

    RowVec to_coords(const Polynomial& p, int degree) const;
    Polynomial from_coords(const RowVec& v, int degree) const;

    // Matrix of the differential on the degree-n slice, rows indexed by
    // basis(n), columns by basis(n+1); which: 0 = d, 1 = del, 2 = dbar.
    const Mat& d_matrix(int n, int which = 0) const;

    // A copy with extra generators appended (re-canonicalized); old_to_new
    // receives the index remapping for the original generators. Differentials
    // of the new generators start unset.
    AlgebraPresentation extended(const std::vector<Generator>& extra,
                                 std::vector<int>* old_to_new) const;

    // Transport a polynomial along a generator-index remapping into `target`.
    static Polynomial remap(const Polynomial& p, const std::vector<int>& old_to_new,
                            const AlgebraPresentation& target);

    std::string monomial_str(const Monomial& m) const;
    std::string poly_str(const Polynomial& p) const;

  private:
    Field field_ = Field::Q;
    GradingKind kind_ = GradingKind::Graded;
    int cutoff_ = 0;
    std::vector<Generator> gens_;
    std::map<std::string, int> index_;
    std::vector<int> conj_;
    std::vector<Polynomial> d_;
    std::vector<bool> d_set_;

    mutable std::map<int, std::vector<Monomial>> basis_cache_;
    mutable std::map<int, std::map<Monomial, int>> basis_pos_cache_;
    mutable std::map<std::pair<int, int>, Mat> d_matrix_cache_;

    std::optional<std::pair<Monomial, int>> mul_monomials(const Monomial& a,
                                                          const Monomial& b) const;
    Polynomial d_monomial(const Monomial& m) const;
    void check_degree_in_range(int n) const;
};

// Tensor product a (x) b: union of generators (collisions renamed with _1/_2
// suffixes), differentials transported, cutoff = min(cutoffs). Kinds and
// fields must agree.
AlgebraPresentation tensor(const AlgebraPresentation& a, const AlgebraPresentation& b);

} // namespace dga
