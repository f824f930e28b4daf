#pragma once

#include <string>
#include <vector>

#include "dga/cohomology.hpp"
#include "dga/gca.hpp"

namespace dga {

// Presentation-level data for a transverse-Kahler-type model: a bigraded
// cohomology algebra H (zero differential, conjugation-closed) extended by a
// rank-2k space W of degree-1 generators. W is described twice, coherently:
//
//   * real generators w_real[0..2k-1] with the real differential
//     d : W -> H^2 (conjugation-invariant classes), and
//   * complex pairs zeta_j = w_real[2j] + i*w_real[2j+1] (names w10[j]) with
//     conjugates in w01[j], carrying the antiholomorphic maps
//     dbar : W^{1,0} -> H^{1,1} and dbar : W^{0,1} -> H^{0,2}.
//
// The remaining structure maps are determined by conjugation: the holomorphic
// part of d(zeta_j) is the conjugate of dbar_w01[j]. validate() checks that the
// three declared maps agree under this rule, degree/bidegree targeting, and
// that H is a cohomology-type algebra over Q(i).
//
// All polynomials are written over the generators of `h`.
struct TransverseKahlerModelSpec {
    AlgebraPresentation h;
    std::vector<std::string> w_real; // 2k names; pair j = (w_real[2j], w_real[2j+1])
    std::vector<Polynomial> d_w;     // per real generator, in H^2, conjugation-invariant
    std::vector<std::string> w10;    // k names for the (1,0) generators
    std::vector<std::string> w01;    // k names for their conjugates
    std::vector<Polynomial> dbar_w10; // dbar of w10[j], supported on bidegree (1,1)
    std::vector<Polynomial> dbar_w01; // dbar of w01[j], supported on bidegree (0,2)

    int rank() const { return static_cast<int>(w10.size()); } // k
    void validate() const; // throws InputError
};

// Real model H (x) /\W as a single-graded presentation: the H generators keep
// their names and caps with zero differential (part H), the w_real generators
// have degree 1 and the declared d (part W).
AlgebraPresentation build_de_rham_model(const TransverseKahlerModelSpec& s);

// Antiholomorphic model H (x) /\(W^{1,0} + W^{0,1}) with differential dbar
// alone (Dolbeault grading kind): zero on H, the declared dbar on the complex
// generators. Conjugation is not declared on the result, since dbar by itself
// anticommutes with it.
AlgebraPresentation build_dolbeault_model(const TransverseKahlerModelSpec& s);

// Total complex model: same generators as the antiholomorphic model but
// bigraded with the full differential d = del + dbar, where del is determined
// by conjugating the dbar data. Conjugation is declared and d commutes with it.
AlgebraPresentation build_tot_model(const TransverseKahlerModelSpec& s);

// The antiholomorphic part of a bigraded presentation: same generators (with
// conjugation undeclared), Dolbeault grading kind, differential the
// (0,1)-component of the original d.
AlgebraPresentation dbar_presentation(const AlgebraPresentation& bigraded);

// Per-degree comparison of ker del ^ ker dbar ^ im d against im del.dbar. The
// second space is always contained in the first; equality in every reported
// degree is the del-dbar property.
struct DdbarDegree {
    int degree = 0;
    Index dim_closed_exact = 0; // dim (ker del ^ ker dbar ^ im d)
    Index dim_del_dbar = 0;     // dim (im del.dbar)
    bool ok = false;
};

struct DdbarReport {
    std::vector<DdbarDegree> degrees; // degrees 0..cutoff-1
    bool overall = false;
    int first_failure_degree = -1; // -1 when overall holds
    std::string witness;           // a closed exact class not in im del.dbar
};

DdbarReport ddbar_check(const AlgebraPresentation& b);

// One certified map in the kernel-subalgebra chain.
struct DcChainArrow {
    std::string description;
    QuasiIsoReport certificate;
};

// Result of dc_subalgebra_chain: the del-dbar gate on the base subalgebra,
// the recorded kernel dimensions that identify the two sub-DGAs, and the four
// certified quasi-isomorphisms
//
//   (ker dc (x) /\W, d)        -> full real model,
//   (ker dc (x) /\W, d)        -> base-cohomology real model,
//   (ker del (x) /\W_C, dbar') -> full antiholomorphic model,
//   (ker del (x) /\W_C, dbar') -> base-cohomology antiholomorphic model,
//
// where dc = i(dbar - del) on the base and dbar' differs from dbar by a
// del-exact correction on each W generator.
struct DcChainReport {
    DdbarReport base_check;
    bool attempted = false;           // false when the base fails the gate
    std::vector<Index> base_dims;     // base slice dimensions per degree
    std::vector<Index> ker_dc_dims;   // dim ker dc on the base, per degree
    std::vector<Index> ker_del_dims;  // dim ker del on the base, per degree
    bool dbar_correction_zero = false; // dbar' = dbar (no correction was needed)
    std::vector<DcChainArrow> arrows;
    bool ok = false;
};

// a: real model (graded, part-tagged as produced by build_de_rham_model);
// b: matching bigraded total model over the same base. Runs the del-dbar gate
// on the base of b; when it passes, builds the two kernel subalgebras and
// certifies the four arrows above up to cutoff-2.
DcChainReport dc_subalgebra_chain(const AlgebraPresentation& a, const AlgebraPresentation& b);

// Result of the rank-2 comparison: an explicit generator-level isomorphism
// from the real model onto the total complex model, checked as a chain map
// and degreewise invertible, plus the dimension consequence that the real
// model's cohomology matches the antiholomorphic cohomology summed along
// total degree.
struct VaismanComparison {
    DgaMorphism iso; // real model -> total model
    bool degreewise_invertible = false;
    std::vector<Index> de_rham_dims;     // dim H^r of the real model
    std::vector<Index> dolbeault_totals; // sum of dim H^{p,q} over p+q = r
    bool totals_agree = false;
    bool ok = false;
};

// Requires the rank-1 shape: dim W = 2, dbar of the (0,1) generator zero, and
// d(W) spanning a single nonzero conjugation-invariant class (the transverse
// Kahler class). Anything else is rejected with InputError.
VaismanComparison vaisman_tot_compare(const TransverseKahlerModelSpec& s);

// Dimensions of (ker del ^ ker dbar) / im del.dbar per bidegree, with
// iso-verdicts for the two natural comparison maps out of each slot.
struct BottChernSlot {
    int p = 0, q = 0;
    Index dim = 0;
    bool to_dolbeault_iso = false; // [x] -> dbar-class of x
};

struct BottChernDegree {
    int degree = 0;
    Index dim = 0;                // sum of the slot dimensions in this degree
    bool to_de_rham_iso = false;  // [x] -> d-class of x, whole degree at once
};

struct BottChernTable {
    std::vector<BottChernSlot> slots;     // realized bidegrees, lexicographic
    std::vector<BottChernDegree> degrees; // degrees 0..cutoff-1
    bool all_iso = false;

    Index dim(int p, int q) const; // 0 for absent slots
};

BottChernTable bott_chern(const AlgebraPresentation& b);

} // namespace dga
