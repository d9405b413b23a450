#include <doctest.h>

#include <cmath>
#include <random>

#include "seqgf/association.hpp"
#include "seqgf/errors.hpp"
#include "oracles.hpp"

using namespace seqgf;

namespace {
const Scale kLog = make_log_scale();
const Scale kLp2 = Scale::log_power(2);
const double kLog2 = std::log(2.0);

GenNumber gn(double c0, double s, double gamma, double delta = 0) {
    return GenNumber::symbolic(SymbolicSeq(GrowthClass(c0, s, gamma, delta, kLog)), kLog);
}
} // namespace

TEST_CASE("null test: closed forms") {
    CHECK(null_test(gn(0, 0, -1)).is_holds());                    // 1/n
    CHECK(null_test(gn(0, 0, 0, 1)).is_fails());                  // log n
    CHECK(null_test(GenNumber::constant(2.0, kLog)).is_fails());
    CHECK(null_test(GenNumber::zero(kLog)).is_holds());
    // negligible implies null
    GenNumber neg = GenNumber::symbolic(SymbolicSeq(GrowthClass(0, -1, 0, 0, kLp2)), kLog);
    CHECK(null_test(neg).is_holds());
}

TEST_CASE("null test on black-box representatives") {
    auto mk = [](double (*f)(double)) {
        return [f](long n) { return std::complex<double>(f(double(n)), 0); };
    };
    CHECK(null_test(GenNumber::callable(mk([](double n) { return 1.0 / n; }), kLog)).is_holds());
    CHECK(null_test(GenNumber::callable(mk([](double n) { return std::log(n); }), kLog)).is_fails());
    CHECK(null_test(GenNumber::callable(mk([](double) { return 2.0; }), kLog)).is_fails());
    // a slowly vanishing black box is left undecided
    CHECK(null_test(GenNumber::callable(mk([](double n) { return std::pow(n, -0.01); }), kLog))
              .is_inconclusive());
}

TEST_CASE("s-association: exact coefficient arithmetic") {
    GenNumber x = gn(0, 0, -2);                  // difference n^-2
    GenNumber z = GenNumber::zero(kLog);
    CHECK(s_assoc(x, z, 1.0).is_holds());        // n^(1-2) -> 0
    CHECK(s_assoc(x, z, 3.0).is_fails());        // n^(3-2) -> inf
    CHECK(s_assoc(x, z, 2.0).is_fails());        // constant 1 in the limit
    // s = 0 agrees with the null test
    for (const GenNumber& y : {gn(0, 0, -1), gn(0, 0, 1), gn(0.5, 0, 0)})
        CHECK(s_assoc(y, z, 0.0).is_holds() == null_test(y).is_holds());
}

TEST_CASE("strong association through ultrametric balls") {
    GenNumber z = GenNumber::zero(kLog);
    CHECK(strong_assoc(gn(0, 0, -2), z).is_holds());        // distance e^-2 < 1
    CHECK(strong_assoc(gn(0, 0, 0, 1), z).is_fails());      // ||log n|| = 1
    GenNumber f = gn(0.3, 0, 1);
    for (double s : {0.0, 1.0, 4.0}) CHECK(strong_assoc(f, f, s).is_holds());
    // s-ball: distance e^-2 against e^-s
    CHECK(strong_assoc(gn(0, 0, -2), z, 1.5).is_holds());
    CHECK(strong_assoc(gn(0, 0, -2), z, 2.0).is_fails());   // boundary: not strict
}

TEST_CASE("weak association rate of the comb pairing") {
    // <embed(comb), psi> with psi-hat = 2^-|k| approaches psi(0) = 3 at the
    // rate 2^(1-K_n), i.e. between 2 n^-log2 and 4 n^-log2
    TorusGF delta = embed(CoeffFamily::constant(), kLog);
    GenNumber paired = pair_gf(delta, CoeffFamily::geometric(0.5));
    GenNumber target = GenNumber::constant(3.0, kLog);

    // closed-form sandwich of the error, checked on the ladder
    for (long n : default_ladder().from(4).points) {
        double err = std::abs(paired.eval(n) - std::complex<double>(3.0, 0));
        double lo = std::pow(double(n), -kLog2);
        CHECK(err > lo * (1 - 1e-9));
        CHECK(err <= 4 * lo * (1 + 1e-9));
    }

    CHECK(s_assoc(paired, target, 0.5).is_holds());
    CHECK(s_assoc(paired, target, 0.8).is_fails());
}

TEST_CASE("weak association over the default test set") {
    TorusGF delta = embed(CoeffFamily::constant(), kLog);
    CHECK(weak_assoc(delta, delta, AssocSpec::weak(1.0, default_testset())).is_holds());

    TorusGF zero = embed(CoeffFamily::zero(), kLog);
    Verdict v = weak_assoc(delta, zero, AssocSpec::weak(0.0, {CoeffFamily::geometric(0.5)}));
    CHECK(v.is_fails()); // the pairing tends to 3, not 0
}

TEST_CASE("strong-weak association on symbolic pairing representatives") {
    GenNumber rep = gn(0, 0, -1); // norm e^-1
    CHECK(strong_weak_on_rep(rep, 0.5).is_holds());
    CHECK(strong_weak_on_rep(rep, 1.0).is_fails()); // boundary: e^-1 is not < e^-1
    CHECK(strong_weak_on_rep(GenNumber::zero(kLog), 8.0).is_holds());

    // boundary witness: (1/log n) e^(-s/r): weak holds, strong-weak fails
    double s = 0.7;
    GenNumber witness = gn(0, -s, 0, -1);
    CHECK(weak_on_rep(witness, s).is_holds());
    CHECK(strong_weak_on_rep(witness, s).is_fails());
}

TEST_CASE("implication chain on random symbolic pairing representatives") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    int violations = 0;
    for (int i = 0; i < 200; ++i) {
        GenNumber rep = gn(coef(rng), coef(rng) - 0.5, coef(rng));
        ChainReport c = implication_chain_on_rep(rep, 1.0, 0.25);
        if (c.violated) ++violations;
    }
    CHECK(violations == 0);
    CHECK_THROWS_AS(implication_chain_on_rep(gn(0, 0, -1), 1.0, 1.0), PreconditionFailed);
}

TEST_CASE("implication chain through actual torus pairings") {
    TorusGF delta = embed(CoeffFamily::constant(), kLog);
    ChainReport c = implication_chain(delta, delta, 1.0, 0.5, default_testset());
    CHECK(!c.violated);
    CHECK(c.strong_weak_s.is_holds());
    CHECK(c.weak_s.is_holds());
}

TEST_CASE("J-association generalizes the pairing flavors") {
    TorusGF delta = embed(CoeffFamily::constant(), kLog);
    TorusGF zero = embed(CoeffFamily::zero(), kLog);
    std::vector<CoeffFamily> d{CoeffFamily::geometric(0.5)};

    CHECK(j_assoc(delta, zero, member_all(), d).is_holds());
    CHECK(j_assoc(delta, zero, member_null(), d).is_fails());
    CHECK(j_assoc(delta, delta, member_null(), d).is_holds());
    CHECK(j_assoc(delta, delta, member_ball(std::exp(-2.0)), d).is_holds());
}

TEST_CASE("black-box distances at the ball radius stay undecided") {
    // |F - G| = 1 has norm 1; against the radius e^0 = 1 the estimate
    // straddles and the verdict must not pretend to know
    GenNumber F = GenNumber::callable([](long n) { return std::complex<double>(double(n) + 1, 0); }, kLog);
    GenNumber G = GenNumber::callable([](long n) { return std::complex<double>(double(n), 0); }, kLog);
    CHECK(strong_assoc(F, G, 0.0).is_inconclusive());
    // with a clearly larger radius the ci decides
    CHECK(strong_assoc(F, G, -2.0).is_holds());
}

TEST_CASE("membership predicates are additivity-sampled") {
    std::mt19937 rng(113);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::vector<std::pair<GenNumber, GenNumber>> pairs;
    for (int i = 0; i < 30; ++i)
        pairs.emplace_back(gn(coef(rng), coef(rng) - 1.5, 0), gn(coef(rng), coef(rng) - 1.5, 0));
    // null sequences and ultrametric balls are additive
    CHECK(check_member_additivity(member_null(), pairs).is_holds());
    CHECK(check_member_additivity(member_ball(0.5), pairs).is_holds());
    // an annulus is not: x and -x sit inside, their sum does not
    MemberPredicate annulus = [](const GenNumber& x) {
        double v = x.norm().value();
        return (v >= 0.1 && v <= 0.3) ? Verdict::holds("")
                                      : Verdict::fails({0, v, "outside the annulus"});
    };
    GenNumber x = gn(0, -1.5, 0); // norm e^-1.5
    std::vector<std::pair<GenNumber, GenNumber>> cancel{{x, gn_neg(x)}};
    CHECK(check_member_additivity(annulus, cancel).is_fails());
}

TEST_CASE("negligible sits inside the null sequences") {
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        SymbolicSeq f(GrowthClass(coef(rng), -1.0 - std::fabs(coef(rng)), coef(rng), 0, kLp2));
        REQUIRE(classify(f, kLog) == SeqClass::Negligible);
        CHECK(null_test(GenNumber::symbolic(f, kLog)).is_holds());
    }
}

TEST_CASE("N^(s) is the e_r^(-s) dilate of the null sequences") {
    std::mt19937 rng(83);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    GenNumber z = GenNumber::zero(kLog);
    for (int i = 0; i < 100; ++i) {
        double s = std::fabs(coef(rng));
        GrowthClass g(coef(rng), coef(rng), coef(rng), 0, kLog);
        GenNumber x = GenNumber::symbolic(SymbolicSeq(g), kLog);
        // x in N^(s) iff x * e_r^s is null
        GrowthClass shifted = gc_mul(g, GrowthClass::unit_e(kLog, s));
        GenNumber xs = GenNumber::symbolic(SymbolicSeq(shifted), kLog);
        CHECK(s_assoc(x, z, s).is_holds() == null_test(xs).is_holds());
    }
}

TEST_CASE("open ball inside N inside closed ball, with the 1/r witness") {
    std::mt19937 rng(89);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        GrowthClass g(coef(rng), coef(rng), coef(rng), 0, kLog);
        SymbolicSeq f(g);
        double norm = norm_exact(f, kLog).value();
        Verdict null = null_test(GenNumber::symbolic(f, kLog));
        if (norm < 1) CHECK(null.is_holds());
        if (null.is_holds()) CHECK(norm <= 1.0 + 1e-12);
    }
    // 1/r_n = log n: norm exactly 1 yet not a null sequence
    SymbolicSeq logn(GrowthClass(0, 0, 0, 1, kLog));
    CHECK(norm_exact(logn, kLog).value() == doctest::Approx(1.0));
    CHECK(null_test(GenNumber::symbolic(logn, kLog)).is_fails());
}

TEST_CASE("ball association is stable under unit-ball multiplication") {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    double s = 1.0;
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        GrowthClass diff(0.0, -s - 0.2 - std::fabs(coef(rng)), 0, 0, kLog);
        SymbolicSeq d(diff);
        REQUIRE(norm_exact(d, kLog).value() < std::exp(-s));
        GrowthClass h(0.0, 0, -std::fabs(coef(rng)), 0, kLog);
        SymbolicSeq hh(h);
        REQUIRE(norm_exact(hh, kLog).value() <= 1.0);
        double prod = norm_exact(seq_mul(d, hh), kLog).value();
        CHECK(prod < std::exp(-s));
        ++checked;
    }
    CHECK(checked == 60);
}

TEST_CASE("strong s-association at every level forces equality in the limit") {
    // a difference passing s in {1,2,4,8} has norm <= e^-8
    GenNumber z = GenNumber::zero(kLog);
    GenNumber tiny = gn(0, -10, 0);  // norm e^-10
    for (double s : {1.0, 2.0, 4.0, 8.0}) CHECK(strong_assoc(tiny, z, s).is_holds());
    CHECK(norm_exact(tiny.sym(), kLog).value() <= std::exp(-8.0));

    GenNumber mid = gn(0, -5, 0);    // norm e^-5 fails the s = 8 ball
    CHECK(strong_assoc(mid, z, 4.0).is_holds());
    CHECK(strong_assoc(mid, z, 8.0).is_fails());
}
