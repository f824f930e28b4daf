#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dga/cohomology.hpp"
#include "dga/gca.hpp"

namespace dga {

// A minimal presentation (decomposable differential) built as a tower of
// Hirsch extensions, together with the comparison map into the target and
// the degree bound through which that map is a certified quasi-isomorphism.
struct MinimalModel {
    AlgebraPresentation model;
    DgaMorphism map;            // model -> target, chain map
    int certified_up_to = -1;   // -1 if the certificate did not hold
};

// Degree-by-degree construction of a minimal model of `a`: for each degree n,
// adjoin closed generators until the induced map surjects onto H^n, then
// generators with prescribed differentials until it injects on H^{n+1}; each
// batch is a Hirsch extension. Generator names are derived from
// (degree, stage, index), so outputs are deterministic. Requires
// up_to <= cutoff-2 so that every consulted cohomology group is below the
// truncation (throws InputError otherwise). A nonzero seed applies an
// invertible change of basis to each batch of representative cocycles;
// generator counts per degree are seed-independent. Throws CutoffError when
// a degree fails to stabilize within the resource bound.
MinimalModel minimal_model(const AlgebraPresentation& a, int up_to, unsigned seed = 0);

// The staged 1-minimal tower: stage 1 adjoins closed degree-1 generators
// spanning H^1; each later stage adjoins one batch of degree-1 generators
// killing the kernel of the induced map on H^2 (stages track lower-central-
// series depth, and the stage-s tower is a sub-DGA of the stage-(s+1) one).
// certified_up_to is 1 when the map is a 1-quasi-isomorphism after the last
// stage (isomorphism on H^1, injection on H^2), else 0.
MinimalModel one_minimal_model(const AlgebraPresentation& a, int stages);

// True iff no generator differential has a linear term, i.e. d lands in the
// span of monomials of word length >= 2.
bool is_minimal(const AlgebraPresentation& a);

// Outcome of a formality certificate search. A positive result carries the
// strategy that produced a zig-zag of quasi-isomorphisms between the
// presentation and its cohomology with zero differential. A negative result
// only reports that the implemented strategies failed; it is never a proof
// of non-formality.
struct FormalityCertificate {
    bool formal = false;
    std::string strategy;                // "zero-differential" or "minimal-model"
    std::vector<std::string> zigzag;     // human-readable arrows, left to right
    std::optional<MinimalModel> witness; // set for the minimal-model strategy
    int checked_up_to = 0;
    std::string failure_reason;          // set when !formal
};

FormalityCertificate is_formal_certificate(const AlgebraPresentation& a, int up_to);

} // namespace dga
