#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dga/dolbeault.hpp"
#include "dga/gca.hpp"
#include "dga/scalar.hpp"

namespace dga {

// ----- model builders -------------------------------------------------------

// Circle times odd sphere S^1 x S^(2n-1) with its standard transverse
// structure: base Q(i)[u]/(u^n) with u of bidegree (1,1), extension
// generators x, y with d(x) = re(c) u and d(y) = im(c) u, and complex
// direction z = x + iy with dbar(z) = c u. The scalar c rescales the
// transverse class and must be nonzero; the cutoff defaults to 2n+1 so the
// top degree of the underlying 2n-manifold is still reported. Throws
// InputError for n < 2 or c = 0.
TransverseKahlerModelSpec hopf_model(int n, const Scalar& c = Scalar(1), int cutoff = 0);

// Product of two 3-spheres: base /\<hx, hy> (bidegree (1,1), squares zero)
// killed by a rank-2 extension whose complex direction mixes the two
// classes, dbar(z) = hx + i hy. The cutoff defaults to 7.
TransverseKahlerModelSpec s3s3_model(int cutoff = 0);

// Copy of `s` with `suffix` appended to every generator name, base and
// extension alike. Dimension tables are unchanged; used to make product
// factors name-disjoint.
TransverseKahlerModelSpec suffixed_spec(const TransverseKahlerModelSpec& s,
                                        const std::string& suffix);

// Product model: base = tensor of the bases, extension generators
// concatenated, differentials transplanted into the product base. Every
// generator name of the two inputs must already be distinct (see
// suffixed_spec); a collision is an InputError.
TransverseKahlerModelSpec product_spec(const TransverseKahlerModelSpec& a,
                                       const TransverseKahlerModelSpec& b);

// ----- Lie-algebra builders --------------------------------------------------

// Structure constants of a finite-dimensional Lie algebra over the basis
// e_1..e_dim: brackets[{i, j}] with 0 <= i < j < dim maps a basis index k to
// the coefficient of e_k in [e_i, e_j]; omitted pairs are zero brackets.
struct LieAlgebraData {
    int dim = 0;
    std::vector<std::string> names; // optional dual-generator names, default e1..edim
    std::map<std::pair<int, int>, std::map<int, Scalar>> brackets;
};

// Length of the lower central series (0 = zero algebra, 1 = abelian,
// 2 = two-step, ...). Throws InputError when the data is malformed, fails
// the Jacobi identity, or is not nilpotent.
int nilpotency_step(const LieAlgebraData& g);

// Multiplicity per weight w of the lower-central-series quotients:
// dim(g^w) - dim(g^(w+1)) for g^1 = g, g^(w+1) = [g, g^w]. These are the
// smallest degree-1 generator weights compatible with the differential of
// the dual algebra, so a weight-count failure for them rules out every
// admissible assignment.
std::map<int, Index> lower_central_weights(const LieAlgebraData& g);

// Dual presentation /\ g^* with d xi(A, B) = -xi([A, B]): one degree-1
// generator per basis vector and d(e_k^*) = -sum_{i<j} c^k_ij e_i^* e_j^*.
// Structure constants must be real; the Jacobi identity and nilpotency are
// verified (InputError otherwise). The cutoff defaults to dim + 2.
AlgebraPresentation chevalley_eilenberg(const LieAlgebraData& g, int cutoff = 0);

// Bigraded variant for an abelian complex structure: j_matrix must be a real
// dim x dim matrix with J^2 = -id and [J e_i, J e_j] = [e_i, e_j] (both
// verified; violations are InputError). A rational basis v_1, Jv_1, ...,
// v_r, Jv_r is extracted and the presentation is built on the complex
// generators om_a = v_a^* + i (Jv_a)^* of bidegree (1,0) together with their
// conjugates omb_a of bidegree (0,1); the abelian condition places every
// d(om_a) in bidegree (1,1).
AlgebraPresentation chevalley_eilenberg(const LieAlgebraData& g, const Mat& j_matrix,
                                        int cutoff = 0);

// ----- transverse wrapping of a basic cohomology ring ------------------------

// The rank-2 model H (x) /\<theta, thetaJ> of a metric structure with
// parallel Lee form: d(theta) = 0, d(thetaJ) = kahler_class, and the complex
// direction eta = theta + i thetaJ with dbar(eta) = i kahler_class.
// `basic_h` must be a bigraded presentation avoiding the four reserved
// generator names, and kahler_class a nonzero conjugation-invariant class of
// bidegree (1,1) in it.
TransverseKahlerModelSpec vaisman_model(const AlgebraPresentation& basic_h,
                                        const Polynomial& kahler_class);

// ----- regression entries -----------------------------------------------------

// Expected integer tables and verdicts for one example model. Exactly one of
// spec / presentation is set. Empty tables and disengaged optionals are not
// asserted; a bidegree table asserts exactly the listed slots (including any
// explicit zeros).
struct CorpusEntry {
    std::string name;
    std::string notes; // one-line origin of the expected numbers

    std::optional<TransverseKahlerModelSpec> spec;
    std::optional<AlgebraPresentation> presentation;
    std::optional<LieAlgebraData> lie;              // set for dual-Lie entries
    std::vector<TransverseKahlerModelSpec> factors; // set for product entries

    std::vector<Index> basic_betti;                   // H^r of the base
    std::map<std::pair<int, int>, Index> basic_hodge; // H^{p,q} of the base
    std::vector<Index> de_rham;                       // H^r of the real model
    std::map<std::pair<int, int>, Index> hodge;       // dbar-cohomology H^{p,q}

    std::optional<bool> fundamental;          // d(W) lands in H^{1,1}
    std::optional<bool> basic_formal;         // del-dbar verdict of the base
    std::optional<bool> frolicher_equal;      // sum_{p+q=r} h^{p,q} = dim H^r(Tot)
    std::optional<int> ddbar_failure_degree;  // presentation entries; -1 = passes
    std::optional<int> nilpotency;            // lower-central-series length

    // Degree-1 generator multiplicities per mixed weight, with the total /
    // weighted-total parameters; weight_n = 0 skips the weight checks.
    std::map<int, Index> weight_multiplicities;
    int weight_n = 0, weight_k = 0;
    std::optional<bool> weight_count_ok;
};

// One comparison row of a corpus run.
struct CorpusCheck {
    std::string label;
    bool ok = false;
    std::string detail; // first mismatch, empty when ok
};

struct CorpusReport {
    std::string name;
    std::vector<CorpusCheck> checks;
    bool ok = false; // conjunction of the rows
};

// Computes every table and verdict asserted by the entry and compares
// exactly (integer equality, no tolerance). Model-backed entries are
// additionally audited for the degreewise inequality
// sum_{p+q=r} h^{p,q} >= dim H^r(Tot); product entries for the tensor
// factorization of their models and the Kunneth count; Lie-backed entries
// for minimality of the presentation. Throws InputError when the entry does
// not carry exactly one of spec / presentation.
CorpusReport run_entry(const CorpusEntry& e);

// The two product examples: S^{1,3} x S^{1,3} and S^{1,1} x S^{3,3}.
std::vector<CorpusEntry> product_models();

// All shipped entries, product entries included.
std::vector<CorpusEntry> corpus_entries();

} // namespace dga
