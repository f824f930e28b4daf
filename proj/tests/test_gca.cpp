#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dga/errors.hpp"
#include "dga/gca.hpp"

using namespace dga;

namespace {

Generator gen(std::string name, int degree) {
    Generator g;
    g.name = std::move(name);
    g.degree = degree;
    return g;
}

Generator bigen(std::string name, int p, int q, std::string conj_name) {
    Generator g;
    g.name = std::move(name);
    g.degree = p + q;
    g.has_bidegree = true;
    g.p = p;
    g.q = q;
    g.conj_name = std::move(conj_name);
    return g;
}

Monomial mono(int degree, std::vector<int> exps) {
    Monomial m;
    m.degree = degree;
    m.exps = std::move(exps);
    return m;
}

Polynomial poly_of(const Monomial& m, const Scalar& c = Scalar(1)) {
    Polynomial p;
    p.add(m, c);
    return p;
}

// Exterior algebra on three degree-1 generators, zero differential.
AlgebraPresentation exterior3(int cutoff = 5) {
    AlgebraPresentation pres(Field::Q, GradingKind::Graded, cutoff,
                             {gen("a", 1), gen("b", 1), gen("c", 1)});
    for (int i = 0; i < 3; ++i) pres.set_d(i, Polynomial());
    return pres;
}

// Heisenberg-shaped algebra: da = db = 0, dc = a*b.
AlgebraPresentation heis3(int cutoff = 5) {
    AlgebraPresentation pres(Field::Q, GradingKind::Graded, cutoff,
                             {gen("a", 1), gen("b", 1), gen("c", 1)});
    pres.set_d("a", Polynomial());
    pres.set_d("b", Polynomial());
    pres.set_d("c", pres.mul(pres.generator_poly("a"), pres.generator_poly("b")));
    return pres;
}

// Odd-sphere-bundle shape: x in degree 2, h in degree 3, dh = x^2.
AlgebraPresentation hopf_like(int cutoff = 8) {
    AlgebraPresentation pres(Field::Q, GradingKind::Graded, cutoff,
                             {gen("x", 2), gen("h", 3)});
    pres.set_d("x", Polynomial());
    pres.set_d("h", pres.pow(pres.generator_poly("x"), 2));
    return pres;
}

// Complexified Kodaira-Thurston shape: d(nu) = -i/2 * mu*mubar.
AlgebraPresentation kt_bigraded(int cutoff = 4) {
    AlgebraPresentation pres(Field::QI, GradingKind::Bigraded, cutoff,
                             {bigen("mu", 1, 0, "mubar"), bigen("mubar", 0, 1, "mu"),
                              bigen("nu", 1, 0, "nubar"), bigen("nubar", 0, 1, "nu")});
    pres.set_d("mu", Polynomial());
    pres.set_d("mubar", Polynomial());
    Polynomial mumubar = pres.mul(pres.generator_poly("mu"), pres.generator_poly("mubar"));
    pres.set_d("nu", mumubar.scaled(Scalar(mpq_class(0), mpq_class(-1, 2))));
    pres.set_d("nubar", mumubar.scaled(Scalar(mpq_class(0), mpq_class(-1, 2))));
    return pres;
}

} // namespace

TEST_CASE("generators are canonically ordered by degree, stably") {
    AlgebraPresentation pres(Field::Q, GradingKind::Graded, 6,
                             {gen("h", 3), gen("x", 2), gen("y", 2)});
    for (int i = 0; i < 3; ++i) pres.set_d(i, Polynomial());
    CHECK(pres.generator(0).name == "x");
    CHECK(pres.generator(1).name == "y");
    CHECK(pres.generator(2).name == "h");
    CHECK(pres.generator_index("h") == 2);
    CHECK(pres.generator_index("absent") == -1);
}

TEST_CASE("constructor rejects malformed generator lists") {
    CHECK_THROWS_AS(AlgebraPresentation(Field::Q, GradingKind::Graded, 5,
                                        {gen("a", 1), gen("a", 2)}),
                    InputError);
    CHECK_THROWS_AS(AlgebraPresentation(Field::Q, GradingKind::Graded, 5, {gen("a", 0)}),
                    InputError);
    Generator bad = gen("a", 1);
    bad.conj_name = "nope";
    CHECK_THROWS_AS(AlgebraPresentation(Field::QI, GradingKind::Graded, 5, {bad}), InputError);
}

TEST_CASE("basis enumeration matches binomial counts for exterior algebras") {
    AlgebraPresentation pres = exterior3();
    CHECK(pres.basis_dim(0) == 1);
    CHECK(pres.basis_dim(1) == 3);
    CHECK(pres.basis_dim(2) == 3);
    CHECK(pres.basis_dim(3) == 1);
    CHECK(pres.basis_dim(4) == 0);
    CHECK_THROWS_AS(pres.basis(6), CutoffError);

    // Degree-2 slice in word order: ab, ac, bc.
    const auto& b2 = pres.basis(2);
    REQUIRE(b2.size() == 3);
    CHECK(pres.monomial_str(b2[0]) == "a*b");
    CHECK(pres.monomial_str(b2[1]) == "a*c");
    CHECK(pres.monomial_str(b2[2]) == "b*c");
    CHECK(pres.basis_position(b2[1]) == 1);
    CHECK(b2[2].word_length() == 2);

    const auto& b1 = pres.basis(1);
    CHECK(pres.monomial_str(b1[0]) == "a");
    CHECK(pres.monomial_str(b1[2]) == "c");
}

TEST_CASE("basis enumeration respects power caps and mixed degrees") {
    AlgebraPresentation free2(Field::Q, GradingKind::Graded, 8, {gen("x", 2)});
    free2.set_d(0, Polynomial());
    CHECK(free2.basis_dim(6) == 1);
    CHECK(free2.basis_dim(5) == 0);

    Generator capped = gen("x", 2);
    capped.power_cap = 1; // x^2 = 0
    AlgebraPresentation trunc(Field::Q, GradingKind::Graded, 8, {capped});
    trunc.set_d(0, Polynomial());
    CHECK(trunc.basis_dim(2) == 1);
    CHECK(trunc.basis_dim(4) == 0);

    AlgebraPresentation hopf = hopf_like();
    for (int n = 0; n <= 8; ++n) {
        // x^a h^b realizes every degree except 1 exactly once up to 8.
        CHECK(hopf.basis_dim(n) == (n == 1 ? 0 : 1));
    }
}

TEST_CASE("multiplication carries Koszul signs and kills odd squares") {
    AlgebraPresentation pres = exterior3();
    Polynomial a = pres.generator_poly("a");
    Polynomial b = pres.generator_poly("b");
    CHECK(pres.mul(a, a).is_zero());
    Polynomial ab = pres.mul(a, b);
    Polynomial ba = pres.mul(b, a);
    CHECK(ba == ab.scaled(Scalar(-1)));
    CHECK(ab == poly_of(mono(2, {1, 1, 0})));

    // Associativity spot check on words.
    Polynomial c = pres.generator_poly("c");
    CHECK(pres.mul(pres.mul(a, b), c) == pres.mul(a, pres.mul(b, c)));
    CHECK(pres.mul(pres.mul(b, c), a) == poly_of(mono(3, {1, 1, 1})));

    // Even generators commute without signs.
    AlgebraPresentation hopf = hopf_like();
    Polynomial x = hopf.generator_poly("x");
    Polynomial h = hopf.generator_poly("h");
    CHECK(hopf.mul(x, h) == hopf.mul(h, x));
    CHECK(hopf.mul(h, h).is_zero());
    CHECK(hopf.pow(x, 3) == poly_of(mono(6, {3, 0})));
}

TEST_CASE("multiplication beyond the cutoff raises CutoffError") {
    AlgebraPresentation pres = exterior3(2);
    Polynomial ab = pres.mul(pres.generator_poly("a"), pres.generator_poly("b"));
    CHECK_THROWS_AS(pres.mul(ab, pres.generator_poly("c")), CutoffError);
    // A product that truncates to zero below the cap is fine even near the cutoff.
    Polynomial aa = pres.mul(pres.generator_poly("a"), pres.generator_poly("a"));
    CHECK(aa.is_zero());
}

TEST_CASE("differential follows the graded Leibniz rule") {
    // da = u, db = v on odd a, b with even targets: d(ab) = u*b - a*v.
    AlgebraPresentation pres(Field::Q, GradingKind::Graded, 6,
                             {gen("a", 1), gen("b", 1), gen("u", 2), gen("v", 2)});
    pres.set_d("u", Polynomial());
    pres.set_d("v", Polynomial());
    pres.set_d("a", pres.generator_poly("u"));
    pres.set_d("b", pres.generator_poly("v"));
    pres.validate();

    Polynomial ab = pres.mul(pres.generator_poly("a"), pres.generator_poly("b"));
    Polynomial expected;
    expected.add(mono(3, {0, 1, 1, 0}), Scalar(1));  // b*u
    expected.add(mono(3, {1, 0, 0, 1}), Scalar(-1)); // a*v
    CHECK(pres.d(ab) == expected);

    // d(x*h) = x^3 when dh = x^2.
    AlgebraPresentation hopf = hopf_like();
    hopf.validate();
    Polynomial xh = hopf.mul(hopf.generator_poly("x"), hopf.generator_poly("h"));
    CHECK(hopf.d(xh) == poly_of(mono(6, {3, 0})));

    // d(x^2) = 2*x*r when dx = r is odd.
    AlgebraPresentation even(Field::Q, GradingKind::Graded, 8, {gen("x", 2), gen("r", 3)});
    even.set_d("r", Polynomial());
    even.set_d("x", even.generator_poly("r"));
    even.validate();
    Polynomial x2 = even.pow(even.generator_poly("x"), 2);
    CHECK(even.d(x2) == poly_of(mono(5, {1, 1}), Scalar(2)));

    // d(a*x) = -a*r across an odd prefix.
    AlgebraPresentation mixed(Field::Q, GradingKind::Graded, 8,
                              {gen("a", 1), gen("x", 2), gen("r", 3)});
    mixed.set_d("a", Polynomial());
    mixed.set_d("r", Polynomial());
    mixed.set_d("x", mixed.generator_poly("r"));
    mixed.validate();
    Polynomial axp = mixed.mul(mixed.generator_poly("a"), mixed.generator_poly("x"));
    CHECK(mixed.d(axp) == poly_of(mono(4, {1, 0, 1}), Scalar(-1)));
}

TEST_CASE("d squares to zero on all slices of the Heisenberg shape") {
    AlgebraPresentation pres = heis3();
    pres.validate();
    for (int n = 0; n + 2 <= pres.cutoff(); ++n) {
        Mat composed = pres.d_matrix(n) * pres.d_matrix(n + 1);
        CHECK(matrix_is_zero(composed));
    }
    // The degree-1 differential matrix maps c (row 2) to a*b (column 0).
    const Mat& d1 = pres.d_matrix(1);
    REQUIRE(d1.rows() == 3);
    REQUIRE(d1.cols() == 3);
    CHECK(d1(0, 0) == Scalar(0));
    CHECK(d1(2, 0) == Scalar(1));
    CHECK(d1(2, 2) == Scalar(0));
}

TEST_CASE("validate rejects broken differentials") {
    // d^2 != 0: du = t, dt = u^2.
    AlgebraPresentation bad(Field::Q, GradingKind::Graded, 6, {gen("u", 2), gen("t", 3)});
    bad.set_d("u", bad.generator_poly("t"));
    bad.set_d("t", bad.pow(bad.generator_poly("u"), 2));
    CHECK_THROWS_AS(bad.validate(), InputError);

    // Non-homogeneous assignment.
    AlgebraPresentation nh(Field::Q, GradingKind::Graded, 6, {gen("a", 1), gen("u", 2)});
    nh.set_d("u", Polynomial());
    nh.set_d("a", nh.generator_poly("u") + nh.unit_poly());
    CHECK_THROWS_AS(nh.validate(), InputError);

    // Imaginary coefficient over Q.
    AlgebraPresentation imq(Field::Q, GradingKind::Graded, 6, {gen("a", 1), gen("u", 2)});
    imq.set_d("u", Polynomial());
    imq.set_d("a", imq.generator_poly("u", Scalar::i()));
    CHECK_THROWS_AS(imq.validate(), InputError);

    // Unassigned differential is reported.
    AlgebraPresentation unset(Field::Q, GradingKind::Graded, 6, {gen("a", 1)});
    CHECK_THROWS_AS(unset.validate(), InputError);

    // Cutoff too small to certify d^2 = 0.
    AlgebraPresentation tiny(Field::Q, GradingKind::Graded, 2, {gen("a", 1)});
    tiny.set_d("a", Polynomial());
    CHECK_THROWS_AS(tiny.validate(), InputError);
}

TEST_CASE("bigraded presentations validate types and split d into del and dbar") {
    AlgebraPresentation kt = kt_bigraded();
    kt.validate();

    Polynomial nu = kt.generator_poly("nu");
    CHECK(kt.del(nu).is_zero());
    Polynomial mumubar = kt.mul(kt.generator_poly("mu"), kt.generator_poly("mubar"));
    CHECK(kt.dbar(nu) == mumubar.scaled(Scalar(mpq_class(0), mpq_class(-1, 2))));

    // d = del + dbar on every slice.
    for (int n = 0; n + 1 <= kt.cutoff(); ++n) {
        Mat sum = kt.d_matrix(n, 1) + kt.d_matrix(n, 2);
        CHECK(sum == kt.d_matrix(n, 0));
    }

    // Bidegree bookkeeping of monomials and type slices.
    auto [p, q] = kt.bidegree_of(mumubar.terms().begin()->first);
    CHECK(p == 1);
    CHECK(q == 1);
    auto pos11 = kt.type_positions(2, 1, 1);
    CHECK(pos11.size() == 4); // mu*mubar, mu*nubar, nu*mubar, nu*nubar
    CHECK(kt.type_positions(2, 2, 0).size() == 1); // mu*nu
    CHECK(kt.type_positions(2, 0, 2).size() == 1);

    // Wrong type for the differential is rejected.
    AlgebraPresentation bad(Field::QI, GradingKind::Bigraded, 4,
                            {bigen("mu", 1, 0, "mubar"), bigen("mubar", 0, 1, "mu"),
                             bigen("nu", 1, 0, "nubar"), bigen("nubar", 0, 1, "nu")});
    bad.set_d("mu", Polynomial());
    bad.set_d("mubar", Polynomial());
    Polynomial munu = bad.mul(bad.generator_poly("mu"), bad.generator_poly("nu"));
    bad.set_d("nu", Polynomial());
    bad.set_d("nubar", munu); // (2,0) is not a legal component for a (0,1) generator
    CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("conjugation is an involution with odd-crossing signs") {
    AlgebraPresentation kt = kt_bigraded();
    Polynomial mu = kt.generator_poly("mu");
    Polynomial nu = kt.generator_poly("nu");
    Polynomial mubar = kt.generator_poly("mubar");
    Polynomial nubar = kt.generator_poly("nubar");

    CHECK(kt.conj(mu) == mubar);
    CHECK(kt.conj(kt.mul(mu, nu)) == kt.mul(mubar, nubar));

    // mu*mubar conjugates to mubar*mu = -mu*mubar; i*mu*mubar is real.
    Polynomial mumubar = kt.mul(mu, mubar);
    CHECK(kt.conj(mumubar) == mumubar.scaled(Scalar(-1)));
    Polynomial real_form = mumubar.scaled(Scalar::i());
    CHECK(kt.conj(real_form) == real_form);

    // Involution on a random-ish element.
    Polynomial z = kt.mul(mu, nubar).scaled(Scalar(2, 3)) + kt.mul(nu, nubar);
    CHECK(kt.conj(kt.conj(z)) == z);
}

TEST_CASE("coordinates round-trip through the monomial basis") {
    AlgebraPresentation pres = heis3();
    Polynomial z = pres.mul(pres.generator_poly("a"), pres.generator_poly("c")).scaled(Scalar(5)) +
                   pres.mul(pres.generator_poly("b"), pres.generator_poly("c"));
    RowVec v = pres.to_coords(z, 2);
    CHECK(pres.from_coords(v, 2) == z);
    CHECK_THROWS_AS(pres.to_coords(z, 3), InputError);
    int deg = -1;
    CHECK(pres.is_homogeneous(z, &deg));
    CHECK(deg == 2);
    CHECK(!pres.is_homogeneous(z + pres.unit_poly()));
}

TEST_CASE("extended presentations preserve old structure under remapping") {
    AlgebraPresentation base(Field::Q, GradingKind::Graded, 6, {gen("a", 1), gen("b", 1)});
    base.set_d("a", Polynomial());
    base.set_d("b", Polynomial());

    std::vector<int> old_to_new;
    AlgebraPresentation ext = base.extended({gen("c", 1), gen("w", 2)}, &old_to_new);
    REQUIRE(old_to_new.size() == 2);
    CHECK(old_to_new[0] == 0);
    CHECK(old_to_new[1] == 1);
    CHECK(ext.generator_index("c") == 2);
    CHECK(ext.generator_index("w") == 3);

    ext.set_d("c", ext.mul(ext.generator_poly("a"), ext.generator_poly("b")));
    ext.set_d("w", Polynomial());
    ext.validate();
    CHECK(ext.basis_dim(1) == 3);
    CHECK(ext.basis_dim(2) == 4); // bc, ac, ab, w

    // Remap transports polynomials along the inclusion.
    Polynomial ab_old = base.mul(base.generator_poly("a"), base.generator_poly("b"));
    Polynomial ab_new = AlgebraPresentation::remap(ab_old, old_to_new, ext);
    CHECK(ab_new == ext.mul(ext.generator_poly("a"), ext.generator_poly("b")));
}

TEST_CASE("tensor products merge generators and rename collisions") {
    AlgebraPresentation circle(Field::Q, GradingKind::Graded, 5, {gen("t", 1)});
    circle.set_d("t", Polynomial());
    AlgebraPresentation two = tensor(circle, circle);
    CHECK(two.generator_count() == 2);
    CHECK(two.generator_index("t_1") == 0);
    CHECK(two.generator_index("t_2") == 1);
    CHECK(two.basis_dim(1) == 2);
    CHECK(two.basis_dim(2) == 1);
    two.validate();

    AlgebraPresentation h = heis3();
    AlgebraPresentation prod = tensor(h, circle);
    CHECK(prod.generator_count() == 4);
    prod.validate();
    // d still sends c to a*b inside the product.
    Polynomial dc = prod.d(prod.generator_poly("c"));
    CHECK(dc == prod.mul(prod.generator_poly("a"), prod.generator_poly("b")));
    CHECK(prod.basis_dim(1) == 4);
    CHECK(prod.basis_dim(2) == 6);

    AlgebraPresentation other(Field::QI, GradingKind::Graded, 5, {gen("s", 1)});
    other.set_d("s", Polynomial());
    CHECK_THROWS_AS(tensor(circle, other), InputError);
}

TEST_CASE("polynomial printing is stable and readable") {
    AlgebraPresentation kt = kt_bigraded();
    CHECK(kt.poly_str(Polynomial()) == "0");
    CHECK(kt.poly_str(kt.unit_poly(Scalar(mpq_class(-3, 2)))) == "-3/2");
    Polynomial p = kt.mul(kt.generator_poly("mu"), kt.generator_poly("mubar"));
    CHECK(kt.poly_str(p) == "mu*mubar");
    CHECK(kt.poly_str(p.scaled(Scalar(mpq_class(0), mpq_class(-1, 2)))) == "-1/2*i*mu*mubar");
    Polynomial mixed = p.scaled(Scalar(1, 1));
    CHECK(kt.poly_str(mixed) == "mu*mubar + i*mu*mubar");

    AlgebraPresentation hopf = hopf_like();
    Polynomial q = hopf.pow(hopf.generator_poly("x"), 2).scaled(Scalar(2)) -
                   hopf.mul(hopf.generator_poly("x"), hopf.generator_poly("h"));
    // Degree sorts first: x^2 (degree 4) precedes x*h (degree 5).
    CHECK(hopf.poly_str(q) == "2*x^2 - x*h");
}
