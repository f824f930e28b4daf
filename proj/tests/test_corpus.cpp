#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dga/cohomology.hpp"
#include "dga/corpus.hpp"
#include "dga/dolbeault.hpp"
#include "dga/errors.hpp"
#include "dga/hodge.hpp"
#include "model_helpers.hpp"

using namespace dga;
using namespace testutil;

namespace {

using Table = std::map<std::pair<int, int>, Index>;

Table nonzero_slots(const BigradedCohomologyTable& t) {
    Table out;
    for (const auto& [pq, slot] : t.slots())
        if (slot.dim() > 0) out[pq] = slot.dim();
    return out;
}

Generator capped_bigen(const std::string& name, int p, int q, int cap,
                       const std::string& conj_name) {
    Generator g = bigen(name, p, q, conj_name);
    g.power_cap = cap;
    return g;
}

// Free bigraded base on `pairs` conjugate 1-form pairs, zero differential.
AlgebraPresentation torus_base(int pairs, int cutoff) {
    std::vector<Generator> gens;
    for (int t = 1; t <= pairs; ++t) {
        const std::string a = "a" + std::to_string(t);
        const std::string ab = "ab" + std::to_string(t);
        gens.push_back(bigen(a, 1, 0, ab));
        gens.push_back(bigen(ab, 0, 1, a));
    }
    AlgebraPresentation pres(Field::QI, GradingKind::Bigraded, cutoff, std::move(gens));
    for (int i = 0; i < pres.generator_count(); ++i) pres.set_d(i, Polynomial());
    return pres;
}

Polynomial torus_class(const AlgebraPresentation& base, int pairs) {
    Polynomial k;
    for (int t = 1; t <= pairs; ++t)
        k += base.mul(base.generator_poly("a" + std::to_string(t)),
                      base.generator_poly("ab" + std::to_string(t)))
                 .scaled(Scalar::i());
    return k;
}

LieAlgebraData heis3_data() {
    LieAlgebraData g;
    g.dim = 3;
    g.brackets[{0, 1}] = {{2, Scalar(1)}};
    return g;
}

LieAlgebraData filiform4_data() {
    LieAlgebraData g;
    g.dim = 4;
    g.brackets[{0, 1}] = {{2, Scalar(1)}};
    g.brackets[{0, 2}] = {{3, Scalar(1)}};
    return g;
}

LieAlgebraData kt_data() {
    LieAlgebraData g;
    g.dim = 4;
    g.brackets[{0, 1}] = {{2, Scalar(1)}};
    return g;
}

Mat kt_j() {
    Mat j = Mat::Zero(4, 4);
    j(1, 0) = Scalar(1);
    j(0, 1) = Scalar(-1);
    j(3, 2) = Scalar(1);
    j(2, 3) = Scalar(-1);
    return j;
}

} // namespace

TEST_CASE("hopf builder shape and guards") {
    CHECK_THROWS_AS(hopf_model(1), InputError);
    CHECK_THROWS_AS(hopf_model(3, Scalar(0)), InputError);

    TransverseKahlerModelSpec s = hopf_model(2);
    CHECK(s.h.cutoff() == 5);
    CHECK(s.h.generator_count() == 1);
    CHECK(s.h.generator(0).power_cap == 1);
    CHECK(s.rank() == 1);
    CHECK(s.w_real == std::vector<std::string>{"x", "y"});
    // c = 1: d(x) = u, d(y) = 0, dbar(z) = u.
    CHECK(s.d_w[0] == s.h.generator_poly("u"));
    CHECK(s.d_w[1].is_zero());
    CHECK(s.dbar_w10[0] == s.h.generator_poly("u"));
    CHECK(s.dbar_w01[0].is_zero());

    TransverseKahlerModelSpec tilted = hopf_model(2, Scalar(2, 3));
    CHECK(tilted.d_w[0] == tilted.h.generator_poly("u", Scalar(2)));
    CHECK(tilted.d_w[1] == tilted.h.generator_poly("u", Scalar(3)));
}

TEST_CASE("rescaling the transverse class keeps every hopf table") {
    TransverseKahlerModelSpec plain = hopf_model(2);
    TransverseKahlerModelSpec tilted = hopf_model(2, Scalar(2, 3));
    CHECK(cohomology(build_de_rham_model(plain)).dims() ==
          cohomology(build_de_rham_model(tilted)).dims());
    CHECK(nonzero_slots(dolbeault_cohomology(build_dolbeault_model(plain))) ==
          nonzero_slots(dolbeault_cohomology(build_dolbeault_model(tilted))));
}

TEST_CASE("hopf tables for n = 2 freeze the classical values") {
    TransverseKahlerModelSpec s = hopf_model(2);
    CHECK(cohomology(s.h).dims() == std::vector<Index>{1, 0, 1, 0, 0});
    CHECK(cohomology(build_de_rham_model(s)).dims() == std::vector<Index>{1, 1, 0, 1, 1});
    Table expected = {{{0, 0}, 1}, {{0, 1}, 1}, {{2, 1}, 1}, {{2, 2}, 1}};
    CHECK(nonzero_slots(dolbeault_cohomology(build_dolbeault_model(s))) == expected);
}

TEST_CASE("the wrapped truncated polynomial ring reproduces the hopf tables") {
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        Generator u = capped_bigen("u", 1, 1, n - 1, "u");
        AlgebraPresentation ring(Field::QI, GradingKind::Bigraded, 2 * n + 1, {u});
        ring.set_d("u", Polynomial());
        TransverseKahlerModelSpec wrapped = vaisman_model(ring, ring.generator_poly("u"));
        TransverseKahlerModelSpec direct = hopf_model(n);
        CHECK(cohomology(build_de_rham_model(wrapped)).dims() ==
              cohomology(build_de_rham_model(direct)).dims());
        CHECK(nonzero_slots(dolbeault_cohomology(build_dolbeault_model(wrapped))) ==
              nonzero_slots(dolbeault_cohomology(build_dolbeault_model(direct))));
        CHECK(nonzero_slots(dolbeault_cohomology(build_tot_model(wrapped))) ==
              nonzero_slots(dolbeault_cohomology(build_tot_model(direct))));
    }
}

TEST_CASE("sphere product tables freeze the hand computation") {
    TransverseKahlerModelSpec s = s3s3_model();
    CHECK(cohomology(s.h).dims() == std::vector<Index>{1, 0, 2, 0, 1, 0, 0});
    CHECK(cohomology(build_de_rham_model(s)).dims() ==
          std::vector<Index>{1, 0, 0, 2, 0, 0, 1});
    Table expected = {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}, {{2, 1}, 1},
                      {{1, 2}, 1}, {{2, 2}, 1}, {{3, 2}, 1}, {{3, 3}, 1}};
    CHECK(nonzero_slots(dolbeault_cohomology(build_dolbeault_model(s))) == expected);
}

TEST_CASE("suffixed copies rename without touching the tables") {
    TransverseKahlerModelSpec s = suffixed_spec(hopf_model(2), "1");
    CHECK(s.h.generator_index("u1") == 0);
    CHECK(s.w_real == std::vector<std::string>{"x1", "y1"});
    CHECK(s.w10 == std::vector<std::string>{"z1"});
    CHECK(cohomology(build_de_rham_model(s)).dims() == std::vector<Index>{1, 1, 0, 1, 1});
}

TEST_CASE("products need name-disjoint factors and factorize structurally") {
    CHECK_THROWS_AS(product_spec(hopf_model(2), hopf_model(2)), InputError);

    TransverseKahlerModelSpec f1 = suffixed_spec(hopf_model(2, Scalar(1), 9), "1");
    TransverseKahlerModelSpec f2 = suffixed_spec(hopf_model(2, Scalar(1), 9), "2");
    TransverseKahlerModelSpec prod = product_spec(f1, f2);
    CHECK(prod.h.generator_count() == 2);
    CHECK(prod.rank() == 2);
    CHECK(structurally_equal(build_de_rham_model(prod),
                             tensor(build_de_rham_model(f1), build_de_rham_model(f2))));
    CHECK(structurally_equal(build_dolbeault_model(prod),
                             tensor(build_dolbeault_model(f1), build_dolbeault_model(f2))));
    CHECK(structurally_equal(build_tot_model(prod),
                             tensor(build_tot_model(f1), build_tot_model(f2))));
}

TEST_CASE("product of two hopf surfaces carries the hand convolution") {
    TransverseKahlerModelSpec prod =
        product_spec(suffixed_spec(hopf_model(2, Scalar(1), 9), "1"),
                     suffixed_spec(hopf_model(2, Scalar(1), 9), "2"));
    CHECK(cohomology(build_de_rham_model(prod)).dims() ==
          std::vector<Index>{1, 2, 1, 2, 4, 2, 1, 2, 1});
    BigradedCohomologyTable t = dolbeault_cohomology(build_dolbeault_model(prod));
    CHECK(t.dim(0, 1) == 2);
    CHECK(t.dim(1, 0) == 0);
    CHECK(t.dim(1, 1) == 0);
    CHECK(t.dim(2, 2) == 4);
    CHECK(t.dim(4, 4) == 1);
}

TEST_CASE("vaisman wrapping guards its input") {
    AlgebraPresentation base = torus_base(1, 5);
    Polynomial kappa = torus_class(base, 1);
    CHECK_NOTHROW(vaisman_model(base, kappa));
    // Zero, wrong bidegree, and non-invariant classes are rejected.
    CHECK_THROWS_AS(vaisman_model(base, Polynomial()), InputError);
    CHECK_THROWS_AS(vaisman_model(base, base.generator_poly("a1")), InputError);
    CHECK_THROWS_AS(
        vaisman_model(base, base.mul(base.generator_poly("a1"), base.generator_poly("ab1"))),
        InputError);
    // Graded bases and reserved generator names are rejected.
    CHECK_THROWS_AS(vaisman_model(heis3(), Polynomial()), InputError);
    AlgebraPresentation clash(Field::QI, GradingKind::Bigraded, 5,
                              {bigen("theta", 1, 0, "etab"), bigen("etab", 0, 1, "theta")});
    clash.set_d("theta", Polynomial());
    clash.set_d("etab", Polynomial());
    Polynomial ck =
        clash.mul(clash.generator_poly("theta"), clash.generator_poly("etab")).scaled(Scalar::i());
    CHECK_THROWS_AS(vaisman_model(clash, ck), InputError);
}

TEST_CASE("the wrapped one-pair torus is the classical surface model") {
    AlgebraPresentation base = torus_base(1, 5);
    TransverseKahlerModelSpec s = vaisman_model(base, torus_class(base, 1));
    CHECK(s.w_real == std::vector<std::string>{"theta", "thetaJ"});
    CHECK(s.d_w[0].is_zero());
    CHECK(is_fundamental(s).fundamental);
    CHECK(cohomology(build_de_rham_model(s)).dims() == std::vector<Index>{1, 3, 4, 3, 1});
    Table expected = {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 2}, {{2, 0}, 1}, {{1, 1}, 2},
                      {{0, 2}, 1}, {{2, 1}, 2}, {{1, 2}, 1}, {{2, 2}, 1}};
    CHECK(nonzero_slots(dolbeault_cohomology(build_dolbeault_model(s))) == expected);
}

TEST_CASE("lie validation rejects malformed bracket data") {
    LieAlgebraData bad_pair;
    bad_pair.dim = 3;
    bad_pair.brackets[{1, 0}] = {{2, Scalar(1)}};
    CHECK_THROWS_AS(nilpotency_step(bad_pair), InputError);

    LieAlgebraData bad_index;
    bad_index.dim = 3;
    bad_index.brackets[{0, 1}] = {{5, Scalar(1)}};
    CHECK_THROWS_AS(nilpotency_step(bad_index), InputError);

    LieAlgebraData bad_names;
    bad_names.dim = 2;
    bad_names.names = {"p"};
    CHECK_THROWS_AS(nilpotency_step(bad_names), InputError);

    // [e1, e2] = e3, [e1, e3] = e1 breaks the Jacobi identity.
    LieAlgebraData bad_jacobi;
    bad_jacobi.dim = 3;
    bad_jacobi.brackets[{0, 1}] = {{2, Scalar(1)}};
    bad_jacobi.brackets[{0, 2}] = {{0, Scalar(1)}};
    CHECK_THROWS_AS(nilpotency_step(bad_jacobi), InputError);

    // [e1, e2] = e2 is solvable but not nilpotent.
    LieAlgebraData affine;
    affine.dim = 2;
    affine.brackets[{0, 1}] = {{1, Scalar(1)}};
    CHECK_THROWS_AS(nilpotency_step(affine), InputError);

    LieAlgebraData complex_constant;
    complex_constant.dim = 3;
    complex_constant.brackets[{0, 1}] = {{2, Scalar::i()}};
    CHECK_THROWS_AS(chevalley_eilenberg(complex_constant), InputError);
}

TEST_CASE("nilpotency steps and lower central weights") {
    LieAlgebraData zero;
    CHECK(nilpotency_step(zero) == 0);

    LieAlgebraData abelian;
    abelian.dim = 3;
    CHECK(nilpotency_step(abelian) == 1);
    CHECK(lower_central_weights(abelian) == std::map<int, Index>{{1, 3}});

    CHECK(nilpotency_step(heis3_data()) == 2);
    CHECK(lower_central_weights(heis3_data()) == std::map<int, Index>{{1, 2}, {2, 1}});

    CHECK(nilpotency_step(filiform4_data()) == 3);
    CHECK(lower_central_weights(filiform4_data()) ==
          std::map<int, Index>{{1, 2}, {2, 1}, {3, 1}});
}

TEST_CASE("three-step weights violate the count that two-step weights satisfy") {
    // Mixed weights of the surface algebra (two of weight 1, two of weight 2):
    // 4 = 2n and 2 + 4 = 2n + 2 with the weight-2 pair branch.
    WeightCountReport two_step = weight_count_check({{1, 2}, {2, 2}}, 2, 1);
    CHECK(two_step.ok);
    CHECK(two_step.dichotomy_branch == 1);
    // Lower-central weights only bound the mixed ones from below, so their
    // undershoot on the same algebra decides nothing...
    WeightCountReport lcs = weight_count_check(lower_central_weights(kt_data()), 2, 1);
    CHECK(lcs.total_ok);
    CHECK(lcs.weighted == 5);
    // ...but the chain algebra overshoots: 2 + 2 + 3 = 7 > 6, and every
    // admissible assignment dominates the lower-central one, so none works.
    WeightCountReport three_step =
        weight_count_check(lower_central_weights(filiform4_data()), 2, 1);
    CHECK_FALSE(three_step.ok);
    CHECK(three_step.total == 4);
    CHECK(three_step.weighted == 7);
    CHECK(three_step.total_ok);
    CHECK_FALSE(three_step.weighted_ok);
}

TEST_CASE("dual presentations carry the bracket as a quadratic differential") {
    AlgebraPresentation pres = chevalley_eilenberg(heis3_data());
    CHECK(pres.field() == Field::Q);
    CHECK(pres.kind() == GradingKind::Graded);
    CHECK(pres.cutoff() == 5);
    CHECK(pres.generator_count() == 3);
    CHECK(pres.d_of_generator(0).is_zero());
    CHECK(pres.d_of_generator(1).is_zero());
    Polynomial expected =
        pres.mul(pres.generator_poly("e1"), pres.generator_poly("e2")).scaled(Scalar(-1));
    CHECK(pres.d_of_generator(2) == expected);
    CHECK(is_minimal(pres));
    CHECK(cohomology(pres).dims() == std::vector<Index>{1, 2, 2, 1, 0});

    LieAlgebraData named = heis3_data();
    named.names = {"p", "q", "r"};
    AlgebraPresentation named_pres = chevalley_eilenberg(named, 4);
    CHECK(named_pres.generator_index("r") == 2);
    CHECK(named_pres.d_of_generator(2) ==
          named_pres.mul(named_pres.generator_poly("p"), named_pres.generator_poly("q"))
              .scaled(Scalar(-1)));
}

TEST_CASE("bigraded dualization matches the known surface algebra") {
    AlgebraPresentation pres = chevalley_eilenberg(kt_data(), kt_j(), 6);
    CHECK(pres.field() == Field::QI);
    CHECK(pres.kind() == GradingKind::Bigraded);
    CHECK(pres.generator_count() == 4);
    CHECK(pres.generator(0).name == "om1");
    CHECK(pres.generator(0).conj_name == "omb1");
    CHECK(pres.d_of_generator(pres.generator_index("om1")).is_zero());
    CHECK(pres.d_of_generator(pres.generator_index("omb1")).is_zero());
    Polynomial expected = pres.mul(pres.generator_poly("om1"), pres.generator_poly("omb1"))
                              .scaled(Scalar(mpq_class(0), mpq_class(-1, 2)));
    CHECK(pres.d_of_generator(pres.generator_index("om2")) == expected);
    CHECK(pres.d_of_generator(pres.generator_index("omb2")) == expected);
    CHECK(cohomology(pres).dims() == std::vector<Index>{1, 3, 4, 3, 1, 0});
    DdbarReport ddbar = ddbar_check(pres);
    CHECK_FALSE(ddbar.overall);
    CHECK(ddbar.first_failure_degree == 2);
}

TEST_CASE("bigraded dualization accepts a rationally tilted complex structure") {
    LieAlgebraData plane;
    plane.dim = 2;
    Mat j = Mat::Zero(2, 2);
    j(1, 0) = Scalar::fraction(1, 2);
    j(0, 1) = Scalar(-2);
    AlgebraPresentation pres = chevalley_eilenberg(plane, j, 4);
    CHECK(pres.generator_count() == 2);
    CHECK(pres.d_of_generator(0).is_zero());
    CHECK(pres.d_of_generator(1).is_zero());
    CHECK(cohomology(pres).dims() == std::vector<Index>{1, 2, 1, 0});
}

TEST_CASE("bigraded dualization guards the complex structure") {
    LieAlgebraData odd;
    odd.dim = 3;
    CHECK_THROWS_AS(chevalley_eilenberg(odd, Mat::Zero(3, 3)), InputError);

    LieAlgebraData plane;
    plane.dim = 2;
    CHECK_THROWS_AS(chevalley_eilenberg(plane, Mat::Zero(3, 3)), InputError);

    Mat identity = Mat::Zero(2, 2);
    identity(0, 0) = Scalar(1);
    identity(1, 1) = Scalar(1);
    CHECK_THROWS_AS(chevalley_eilenberg(plane, identity), InputError);

    Mat imaginary = Mat::Zero(2, 2);
    imaginary(1, 0) = Scalar::i();
    imaginary(0, 1) = Scalar::i();
    CHECK_THROWS_AS(chevalley_eilenberg(plane, imaginary), InputError);

    // The standard J on the three-step chain algebra is not abelian.
    CHECK_THROWS_AS(chevalley_eilenberg(filiform4_data(), kt_j()), InputError);
}

TEST_CASE("run_entry needs exactly one backing object") {
    CorpusEntry empty;
    empty.name = "empty";
    CHECK_THROWS_AS(run_entry(empty), InputError);

    CorpusEntry both;
    both.name = "both";
    both.spec = hopf_model(2);
    both.presentation = chevalley_eilenberg(heis3_data());
    CHECK_THROWS_AS(run_entry(both), InputError);
}

TEST_CASE("run_entry reports mismatches instead of passing them") {
    CorpusEntry e;
    e.name = "wrong";
    e.spec = hopf_model(2);
    e.de_rham = {1, 1, 1, 1, 1};
    CorpusReport rep = run_entry(e);
    CHECK_FALSE(rep.ok);
    bool found = false;
    for (const CorpusCheck& c : rep.checks)
        if (c.label == "de Rham dimensions") {
            found = true;
            CHECK_FALSE(c.ok);
            CHECK(c.detail.find("expected") != std::string::npos);
        }
    CHECK(found);
}

TEST_CASE("every corpus entry passes its audit") {
    std::vector<CorpusEntry> entries = corpus_entries();
    CHECK(entries.size() == 15);
    std::set<std::string> names;
    for (const CorpusEntry& e : entries) {
        CAPTURE(e.name);
        CHECK(names.insert(e.name).second);
        CorpusReport rep = run_entry(e);
        CHECK(!rep.checks.empty());
        for (const CorpusCheck& c : rep.checks) {
            CAPTURE(c.label);
            CAPTURE(c.detail);
            CHECK(c.ok);
        }
        CHECK(rep.ok);
    }
}

TEST_CASE("the shipped product entries really are products") {
    std::vector<CorpusEntry> prods = product_models();
    CHECK(prods.size() == 2);
    for (const CorpusEntry& e : prods) {
        CAPTURE(e.name);
        CHECK(e.factors.size() == 2);
        CHECK(e.spec.has_value());
        KunnethReport k = kunneth_check(build_de_rham_model(e.factors[0]),
                                        build_de_rham_model(e.factors[1]));
        CHECK(k.ok);
        CHECK(cohomology(build_de_rham_model(*e.spec)).dims() == k.product_dims);
    }
}

TEST_CASE("mixed product separates the antiholomorphic table from the real one") {
    std::vector<CorpusEntry> prods = product_models();
    const CorpusEntry& mixed = prods[1];
    REQUIRE(mixed.name == "s11_x_s33");
    BigradedCohomologyTable t = dolbeault_cohomology(build_dolbeault_model(*mixed.spec));
    // One factor contributes a holomorphic 1-form, the other does not.
    CHECK(t.dim(1, 0) == 1);
    CHECK(t.dim(0, 1) == 2);
    CHECK(t.dim(2, 2) == 4);
    CHECK(t.dim(4, 4) == 1);
    std::vector<Index> dr = cohomology(build_de_rham_model(*mixed.spec)).dims();
    Index sum2 = t.dim(2, 0) + t.dim(1, 1) + t.dim(0, 2);
    CHECK(sum2 > dr[2]); // strict in degree 2: 4 slots against b_2 = 1
}
