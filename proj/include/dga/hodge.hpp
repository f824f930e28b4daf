#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dga/dolbeault.hpp"
#include "dga/filtered.hpp"
#include "dga/sullivan.hpp"

namespace dga {

// Direction of a filtration: increasing levels W_0 ⊆ W_1 ⊆ ... or decreasing
// levels F^0 ⊇ F^1 ⊇ ...
enum class FiltrationDirection { Increasing, Decreasing };

// A filtration of one coordinate space by subspaces, stored at finitely many
// integer levels. Lookups between and beyond the stored levels follow step
// conventions that keep every filtration bounded below and finite above:
//   increasing: at(l) is the value at the largest stored level <= l, and the
//               zero subspace below the lowest stored level;
//   decreasing: at(l) is the value at the smallest stored level >= l, and the
//               zero subspace above the highest stored level.
// validate() checks monotone nesting and exhaustion: the highest stored value
// (increasing) respectively the lowest stored value (decreasing) must be the
// full space.
class Filtration {
  public:
    Filtration() = default;
    Filtration(FiltrationDirection direction, Index ambient)
        : direction_(direction), ambient_(ambient) {}

    FiltrationDirection direction() const { return direction_; }
    Index ambient() const { return ambient_; }

    void set_level(int level, Subspace s);
    const std::map<int, Subspace>& levels() const { return levels_; }
    bool empty() const { return levels_.empty(); }
    int lowest() const;  // lowest stored level; throws InputError when empty
    int highest() const; // highest stored level

    Subspace at(int level) const;

    void validate() const;

  private:
    FiltrationDirection direction_ = FiltrationDirection::Increasing;
    Index ambient_ = 0;
    std::map<int, Subspace> levels_;
};

// An antilinear involution of a coordinate space: x -> entrywise_conj(x) * matrix.
struct Conjugation {
    Mat matrix;

    static Conjugation entrywise(Index n); // identity matrix

    RowVec apply(const RowVec& v) const;
    Subspace apply(const Subspace& s) const;

    // Square matrix and involution; throws InputError.
    void validate() const;
};

// Conjugation of the degree-n coordinate slice induced by a presentation's
// generator involution.
Conjugation degree_conjugation(const AlgebraPresentation& a, int degree);

// Conjugation induced on degree-n cohomology classes: conjugate a class
// representative and take the class of the result.
Conjugation cohomology_conjugation(const AlgebraPresentation& a, const CohomologyTable& h,
                                   int degree);

// A pure weight-n decomposition V = ⊕_{p+q=n} V_{p,q} with conj(V_{p,q}) = V_{q,p}.
struct HodgeStructure {
    int weight = 0;
    std::map<std::pair<int, int>, Subspace> components; // nonzero slots only

    Index dim(int p, int q) const;
};

// Outcome of checking the splitting condition F^p ⊕ conj(F^{n+1-p}) = V for
// every p. On success `structure` holds the derived components
// V_{p,q} = F^p ∩ conj(F^q); on failure `offending_p` is the first level where
// the splitting breaks, with the overlap dimension and the codimension of the
// span recorded.
struct HodgeStructureReport {
    bool ok = false;
    int offending_p = 0;
    Index overlap = 0;
    Index missing = 0;
    HodgeStructure structure;
};

HodgeStructureReport validate_hodge_structure(const Filtration& f, const Conjugation& conj,
                                              int weight);

// The canonical splitting of a compatible pair (W increasing and stable under
// conjugation, F decreasing) into V_{p,q} = R_{p,q} ∩ L_{p,q} with
//   R_{p,q} = W_{p+q} ∩ F^p
//   L_{p,q} = W_{p+q} ∩ conj(F^q) + Σ_{i>=2} W_{p+q-i} ∩ conj(F^{q-i+1}).
// The intermediate spaces are retained for audit at every nonzero slot.
struct Bigrading {
    Index ambient = 0;
    std::map<std::pair<int, int>, Subspace> components;
    std::map<std::pair<int, int>, Subspace> r_parts;
    std::map<std::pair<int, int>, Subspace> l_parts;

    Index dim(int p, int q) const;
    std::vector<std::pair<int, int>> nonzero_slots() const;
};

// Computes the canonical bigrading of (w, f, conj). Preconditions checked:
// both filtrations validate with the expected directions on a common ambient
// space, every stored level of w is conjugation-stable, and each graded piece
// Gr^W_n carries a weight-n structure — verified by building the induced
// filtration and conjugation on the quotient and calling
// validate_hodge_structure; failure raises InputError naming the weight.
// The output is certified: W_n = ⊕_{p+q<=n} V_{p,q}, F^r = ⊕_{p>=r} V_{p,q},
// and conj(V_{p,q}) ⊆ V_{q,p} + ⊕_{r+s<p+q} V_{r,s}; a violation raises
// logic_error.
Bigrading canonical_bigrading(const Filtration& w, const Filtration& f, const Conjugation& conj);

// True iff the differential of every degree-1 extension generator lies in the
// (1,1) component of the base; otherwise `witness` names an offending
// generator and `stray` holds the component of its differential outside
// bidegree (1,1). The verdict depends only on the image subspace d(W), so it
// is invariant under a change of basis of the extension generators.
struct FundamentalityReport {
    bool fundamental = false;
    std::string witness;
    Polynomial stray;
};

FundamentalityReport is_fundamental(const TransverseKahlerModelSpec& s);

// Mixed weight/type data carried by one cohomology degree: the shifted weight
// filtration (level = extension word length + degree), the type filtration,
// the induced conjugation, and the canonical bigrading of the triple.
struct DegreeMixedHodge {
    int degree = 0;
    Filtration weight; // increasing, on cohomology coordinates
    Filtration hodge;  // decreasing
    Conjugation conj;
    Bigrading bigrading;
};

// Weight and type filtrations of the complexified total model of a spec.
//
// Monomial levels: the weight level of a monomial is its word length in the
// extension generators, and its type level is the holomorphic degree of its
// base part plus that word length — extension generators count (1,1) toward
// the mixed type, which is exactly what fundamentality makes compatible with
// the differential. `pages` holds pages 0 and 1 of the spectral sequence of
// the weight filtration (levels negated to read decreasingly); page 0 must
// carry zero differentials and page 1 must match the closed-form prediction
// dim E_1^{-l, q} = dim H_base^{q-2l} * C(2k, l). On cohomology the weight
// filtration is shifted up by the degree before the mixed structure is
// assembled and canonically bigraded.
struct ModelFiltrations {
    AlgebraPresentation tot;                // the complexified model whose slices are filtered
    std::vector<Filtration> weight_slices;  // per degree 0..cutoff-1, increasing
    std::vector<Filtration> hodge_slices;   // per degree, decreasing
    std::vector<SpectralPage> pages;        // pages 0..1 of the weight filtration
    bool d0_trivial = false;
    bool e1_identified = false;
    CohomologyTable h;                      // cohomology of the total model
    std::vector<DegreeMixedHodge> cohomology; // per degree 0..cutoff-1
    bool ok = false;                        // d0_trivial && e1_identified
};

// Throws InputError when the spec is not fundamental (the type filtration is
// only differential-compatible in that case) or the mixed-structure
// precondition fails on some cohomology degree.
ModelFiltrations model_filtrations(const TransverseKahlerModelSpec& s);

// Verdict on the low-degree slot shapes of the canonical bigradings: the only
// allowed degree-1 slots are {(1,0),(0,1),(1,1)} and the only allowed
// degree-2 slots are {(2,0),(1,1),(0,2),(2,1),(1,2),(2,2)}.
struct ShapeCheckReport {
    std::vector<std::pair<int, int>> h1_slots;
    std::vector<std::pair<int, int>> h2_slots;
    std::vector<std::pair<int, int>> h1_offending;
    std::vector<std::pair<int, int>> h2_offending;
    bool ok = false;
};

ShapeCheckReport h1_h2_shape_check(const Bigrading& h1, const Bigrading& h2);

// Bidegree assigned to one generator of a minimal model.
struct GeneratorBidegree {
    std::string name;
    int degree = 0;
    int p = -1, q = -1; // -1 when unassigned
};

// Bidegree assignment for the tower generators of a minimal model of the
// complexified total model, together with the compatibility certificates.
struct BigradedModelReport {
    std::vector<GeneratorBidegree> assignment; // canonical generator order
    bool assigned = false;                     // every generator received a bidegree
    std::string obstruction;                   // first failure, empty when assigned
    bool differential_ok = false;              // d is type (0,0) under the assignment
    bool images_ok = false;   // classes of type-(p,q) cocycles land in V_{p,q}
    int checked_up_to = -1;   // top degree covered by images_ok
    bool ok = false;
};

// Assigns a bidegree to every generator of m.model: the type of its image
// when that is nonzero, the type of its differential otherwise; both must be
// type-homogeneous and agree when present. The assignment makes the product
// and the differential type (0,0), and the induced classes are checked
// against the canonical bigradings of the spec's cohomology through degree
// certified_up_to + 1. The target of m must be the complexified total model
// of s; an inhomogeneous image or differential is reported as an obstruction
// rather than thrown.
BigradedModelReport bigraded_minimal_model(const MinimalModel& m,
                                           const TransverseKahlerModelSpec& s);

// Name -> (p,q) map of a successful assignment; throws InputError when the
// report carries an obstruction.
std::map<std::string, std::pair<int, int>> generator_types(const BigradedModelReport& r);

// Verdict on the weight multiplicities m_w of the degree-1 part of a bigraded
// minimal model of a nilmanifold-type presentation: Σ m_w = 2n and
// Σ w·m_w = 2n + 2k must hold, and for k = 1 the surplus Σ_{w>=2} (w-1) m_w = 2
// forces one of two branches: (m_2 = 2, m_w = 0 for w >= 3) or
// (m_2 = 0, m_3 = 1, m_w = 0 for w >= 4).
struct WeightCountReport {
    std::map<int, Index> multiplicities;
    Index total = 0;    // Σ m_w
    Index weighted = 0; // Σ w·m_w
    bool total_ok = false;
    bool weighted_ok = false;
    int dichotomy_branch = 0; // k = 1: 1 or 2, 0 = neither; -1 when k != 1
    bool ok = false;
};

WeightCountReport weight_count_check(const std::map<int, Index>& multiplicities, int n, int k);

// Multiplicities read off the degree-1 generators of `model`, with the weight
// of a generator the total p+q of its assigned bidegree.
WeightCountReport weight_count_check(const AlgebraPresentation& model,
                                     const std::map<std::string, std::pair<int, int>>& types,
                                     int n, int k);

// Generator of the dualized Lie presentation; the bidegree is the negative of
// the model generator's bidegree.
struct LieGenerator {
    std::string name;
    int p = 0, q = 0;
};

// One relation of the dualized presentation: the bracket of generators i < j
// expressed in the generator basis, with the relation's bidegree. With the
// usual duality convention <dξ, A∧B> = -<ξ, [A,B]>, the bracket coordinates
// are the negated coefficients of the monomial g_i g_j across the generator
// differentials.
struct LieRelation {
    int i = 0, j = 0;
    int p = 0, q = 0;
    RowVec bracket;
    bool allowed = false;
};

// Dual of a bigraded one-minimal presentation: one Lie generator per
// degree-1 model generator (negated bidegree) and one relation per unordered
// generator pair fixing its bracket. The verdict checks generator bidegrees
// against {(-1,0),(0,-1),(-1,-1)} and relation bidegrees against
// {(-1,-1),(-1,-2),(-2,-1),(-2,-2)}.
struct BigradedLiePresentation {
    std::vector<LieGenerator> generators;
    std::vector<LieRelation> relations;
    bool generator_types_ok = false;
    bool relation_types_ok = false;
    std::pair<int, int> offending{0, 0}; // first disallowed relation bidegree
    bool ok = false;
};

// `model` must consist of degree-1 generators only, be minimal, and have a
// type-(0,0) differential under `types` (every generator must appear in the
// map); violations throw InputError.
BigradedLiePresentation dual_lie_presentation(
    const AlgebraPresentation& model, const std::map<std::string, std::pair<int, int>>& types);

} // namespace dga
