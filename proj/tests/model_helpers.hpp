#pragma once

// Small presentation builders shared by the test suites.

#include <string>
#include <vector>

#include "dga/gca.hpp"

namespace testutil {

inline dga::Generator gen(std::string name, int degree) {
    dga::Generator g;
    g.name = std::move(name);
    g.degree = degree;
    return g;
}

inline dga::Generator capped_gen(std::string name, int degree, int cap) {
    dga::Generator g = gen(std::move(name), degree);
    g.power_cap = cap;
    return g;
}

inline dga::Generator bigen(std::string name, int p, int q, std::string conj_name) {
    dga::Generator g;
    g.name = std::move(name);
    g.degree = p + q;
    g.has_bidegree = true;
    g.p = p;
    g.q = q;
    g.conj_name = std::move(conj_name);
    return g;
}

// Exterior algebra on one degree-1 generator t, zero differential.
inline dga::AlgebraPresentation circle(int cutoff = 5) {
    dga::AlgebraPresentation pres(dga::Field::Q, dga::GradingKind::Graded, cutoff, {gen("t", 1)});
    pres.set_d("t", dga::Polynomial());
    return pres;
}

// Heisenberg shape: three degree-1 generators, dc = a*b.
inline dga::AlgebraPresentation heis3(int cutoff = 5) {
    dga::AlgebraPresentation pres(dga::Field::Q, dga::GradingKind::Graded, cutoff,
                                  {gen("a", 1), gen("b", 1), gen("c", 1)});
    pres.set_d("a", dga::Polynomial());
    pres.set_d("b", dga::Polynomial());
    pres.set_d("c", pres.mul(pres.generator_poly("a"), pres.generator_poly("b")));
    return pres;
}

// Odd-sphere-bundle shape: x in degree 2 free, h in degree 3, dh = x^2.
inline dga::AlgebraPresentation hopf_like(int cutoff = 8) {
    dga::AlgebraPresentation pres(dga::Field::Q, dga::GradingKind::Graded, cutoff,
                                  {gen("x", 2), gen("h", 3)});
    pres.set_d("x", dga::Polynomial());
    pres.set_d("h", pres.pow(pres.generator_poly("x"), 2));
    return pres;
}

// Two capped degree-2 generators, zero differential: dims (1,0,2,0,1).
inline dga::AlgebraPresentation two_spheres_base(int cutoff = 6) {
    dga::AlgebraPresentation pres(dga::Field::Q, dga::GradingKind::Graded, cutoff,
                                  {capped_gen("u", 2, 1), capped_gen("v", 2, 1)});
    pres.set_d("u", dga::Polynomial());
    pres.set_d("v", dga::Polynomial());
    return pres;
}

// Complexified Kodaira-Thurston shape: d(nu) = d(nubar) = -i/2 * mu*mubar.
inline dga::AlgebraPresentation kt_bigraded(int cutoff = 6) {
    dga::AlgebraPresentation pres(
        dga::Field::QI, dga::GradingKind::Bigraded, cutoff,
        {bigen("mu", 1, 0, "mubar"), bigen("mubar", 0, 1, "mu"), bigen("nu", 1, 0, "nubar"),
         bigen("nubar", 0, 1, "nu")});
    pres.set_d("mu", dga::Polynomial());
    pres.set_d("mubar", dga::Polynomial());
    dga::Polynomial mumubar =
        pres.mul(pres.generator_poly("mu"), pres.generator_poly("mubar"));
    pres.set_d("nu", mumubar.scaled(dga::Scalar(mpq_class(0), mpq_class(-1, 2))));
    pres.set_d("nubar", mumubar.scaled(dga::Scalar(mpq_class(0), mpq_class(-1, 2))));
    return pres;
}

} // namespace testutil
