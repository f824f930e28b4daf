#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "dga/cohomology.hpp"
#include "dga/gca.hpp"

namespace dga {

// A decreasing multiplicative filtration described at the monomial level:
// F^p C^n = span of the degree-n monomials whose level is >= p. The level
// function must be additive enough for d to be filtration-preserving; this is
// the caller's responsibility and is asserted during page construction.
using LevelFunction = std::function<int(const Monomial&)>;

// One page of the spectral sequence of a filtration. Bases hold one row per
// class, written in the coordinates of the total-degree slice C^{p+q}.
// Differential matrices act on page coordinates and land in (p+r, q-r+1);
// they are stored only when both endpoints have positive dimension and the
// target total degree is still within the reported range.
struct SpectralPage {
    int r = 0;
    std::map<std::pair<int, int>, Mat> bases;
    std::map<std::pair<int, int>, Mat> differentials;

    Index dim(int p, int q) const;
    // Sum of dims over p+q = n.
    Index total(int n) const;
};

// Pages r = 0..count-1 of the spectral sequence of the filtration, with every
// subquotient computed exactly from Z_r^{p,q} = F^p ∩ d^{-1}(F^{p+r}).
// Total degrees range over [0, cutoff-1].
std::vector<SpectralPage> spectral_pages(const AlgebraPresentation& a,
                                         const LevelFunction& level, int count = 3);

// Comparison of the last computed page against the cohomology of the total
// complex: equality in every total degree means the sequence has degenerated.
struct DegenerationReport {
    std::vector<Index> page_totals; // per total degree 0..cutoff-1
    std::vector<Index> h_dims;
    bool degenerate = false;
    std::vector<int> active_degrees; // degrees where later differentials must act
};

DegenerationReport degeneration_report(const AlgebraPresentation& a, const SpectralPage& page);

} // namespace dga
