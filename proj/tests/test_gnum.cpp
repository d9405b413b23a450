#include <doctest.h>

#include <cmath>
#include <random>

#include "seqgf/gnum.hpp"
#include "seqgf/errors.hpp"
#include "oracles.hpp"

using namespace seqgf;

namespace {
const Scale kLog = make_log_scale();
const Scale kLp2 = Scale::log_power(2);

SymbolicSeq poly(double c0, double gamma) {
    return SymbolicSeq(GrowthClass(c0, 0, gamma, 0, kLog));
}
SymbolicSeq negligible(double strength = 1.0) {
    return SymbolicSeq(GrowthClass(0, -strength, 0, 0, kLp2)); // n^(-strength*log n)
}
} // namespace

TEST_CASE("ring operations stay moderate and respect the quotient") {
    GenNumber n1 = GenNumber::symbolic(poly(0, 1), kLog);
    GenNumber sum = gn_add(n1, gn_neg(n1));
    CHECK(eq_quotient(sum, GenNumber::zero(kLog)).is_holds());

    GenNumber sq = gn_mul(n1, n1);
    CHECK(sq.classification() == SeqClass::ModerateNotNegligible);
    CHECK(sq.norm().value() == doctest::Approx(std::exp(2.0)));

    GenNumber e = unit_e_r(kLog);
    GenNumber prod = gn_mul(e, gn_invert(e));
    CHECK(eq_quotient(prod, GenNumber::constant(1.0, kLog)).is_holds());
}

TEST_CASE("construction rejects unbounded representatives") {
    SymbolicSeq expn(GrowthClass(0, 1, 0, 0, make_power_scale(1))); // e^n
    CHECK_THROWS_AS(GenNumber::symbolic(expn, kLog), NotModerate);
    CHECK_THROWS_AS(GenNumber::callable([](long n) { return std::complex<double>(
                                            std::exp(double(n) / 50.0), 0); },
                                        kLog),
                    NotModerate);
}

TEST_CASE("quotient equality: closed-form decisions with witnesses") {
    GenNumber a = GenNumber::symbolic(poly(0, 1), kLog);
    GenNumber b = GenNumber::symbolic(seq_add(poly(0, 1), negligible()), kLog);
    CHECK(eq_quotient(a, b).is_holds());

    GenNumber twice = GenNumber::symbolic(poly(std::log(2.0), 1), kLog);
    Verdict v = eq_quotient(a, twice);
    CHECK(v.is_fails());
    CHECK(v.witness().has_value());

    CHECK(eq_quotient(a, a).is_holds());
    for (double c : {1.0, -2.0, 0.5})
        CHECK(eq_quotient(GenNumber::constant(c, kLog), GenNumber::zero(kLog)).is_fails());
}

TEST_CASE("black-box quotient equality never certifies Holds") {
    GenNumber x = GenNumber::callable([](long n) { return std::complex<double>(double(n), 0); }, kLog);
    GenNumber y = GenNumber::callable([](long n) { return std::complex<double>(double(n), 0); }, kLog);
    CHECK(eq_quotient(x, y).is_inconclusive());
    GenNumber z = GenNumber::callable([](long n) { return std::complex<double>(2.0 * n, 0); }, kLog);
    CHECK(eq_quotient(x, z).is_fails());
}

TEST_CASE("maddox l-infinity test: frozen weights") {
    // x = n^3: the sup is tamed exactly from k >= e^3, and the sampled
    // decay criterion settles at ceil(e^4) = 55
    MaddoxResult r = maddox_linf_test(GenNumber::symbolic(poly(0, 3), kLog));
    CHECK(r.verdict.is_holds());
    REQUIRE(r.k.has_value());
    CHECK(*r.k == 55);

    // e^n escapes every weight up to k_max
    MaddoxResult esc = maddox_linf_test(
        [](long n) { return double(n); }, kLog); // log|x_n| = n
    CHECK(esc.verdict.is_fails());

    MaddoxResult zero = maddox_linf_test(GenNumber::zero(kLog));
    CHECK(zero.verdict.is_holds());
    CHECK(*zero.k == 1);
}

TEST_CASE("maddox c0 test: frozen weights") {
    // n^(-log n) decays against every sampled weight
    MaddoxResult neg = maddox_c0_test(GenNumber::symbolic(negligible(), kLog));
    CHECK(neg.verdict.is_holds());

    // n^-5 blows up once log k > 5; the geometric scan witnesses ceil(e^6) = 404
    MaddoxResult r = maddox_c0_test(GenNumber::symbolic(poly(0, -5), kLog));
    CHECK(r.verdict.is_fails());
    REQUIRE(r.k.has_value());
    CHECK(*r.k == 404);

    MaddoxResult zero = maddox_c0_test(GenNumber::zero(kLog));
    CHECK(zero.verdict.is_holds());
}

TEST_CASE("maddox tests agree with the norm classification") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> half(-4, 4);
    for (int i = 0; i < 60; ++i) {
        double s = 0.5 * half(rng), g = 0.5 * half(rng);
        SymbolicSeq f(GrowthClass(0.25 * half(rng), s, g, 0, kLog));
        SeqClass c = classify(f, kLog);
        GenNumber x = GenNumber::symbolic(f, kLog);
        MaddoxResult linf = maddox_linf_test(x);
        MaddoxResult c0 = maddox_c0_test(x);
        CHECK(linf.verdict.is_holds() == (c != SeqClass::Unbounded));
        CHECK(c0.verdict.is_holds() == (c == SeqClass::Negligible));
        if (c != SeqClass::Negligible) CHECK(!c0.verdict.is_holds());
    }
    // negligible directions
    for (double k : {1.0, 2.0}) {
        GenNumber x = GenNumber::symbolic(negligible(k), kLog);
        CHECK(maddox_linf_test(x).verdict.is_holds());
        CHECK(maddox_c0_test(x).verdict.is_holds());
    }
    // unbounded direction
    CHECK(maddox_linf_test([](long n) { return std::sqrt(double(n)); }, kLog).verdict.is_fails());
}

TEST_CASE("the unit e_r and its inverse") {
    GenNumber e = unit_e_r(kLog);
    for (long n : {16L, 1024L})
        CHECK(e.eval(n).real() == doctest::Approx(double(n))); // e^(1/r_n) = n at the log scale
    CHECK(e.norm().value() == doctest::Approx(std::exp(1.0)));
    CHECK(eq_quotient(gn_mul(e, unit_e_r(kLog, -1.0)), GenNumber::constant(1.0, kLog)).is_holds());

    CHECK_THROWS_AS(gn_invert(GenNumber::symbolic(seq_add(poly(0, 1), poly(0, 0)), kLog)),
                    Unsupported);
    SymbolicSeq alt(GrowthClass(0, 0, 0, 0, kLog, Phase::Alternating));
    CHECK_THROWS_AS(gn_invert(GenNumber::symbolic(alt, kLog)), Unsupported);
}

TEST_CASE("ring axioms hold exactly on quotient classes") {
    std::mt19937 rng(97);
    std::uniform_real_distribution<double> coef(-1.5, 1.5);
    for (int i = 0; i < 40; ++i) {
        GenNumber a = GenNumber::symbolic(poly(coef(rng), coef(rng)), kLog);
        GenNumber b = GenNumber::symbolic(poly(coef(rng), coef(rng)), kLog);
        GenNumber c = GenNumber::symbolic(poly(coef(rng), coef(rng)), kLog);
        CHECK(eq_quotient(gn_add(gn_add(a, b), c), gn_add(a, gn_add(b, c))).is_holds());
        CHECK(eq_quotient(gn_mul(gn_mul(a, b), c), gn_mul(a, gn_mul(b, c))).is_holds());
        CHECK(eq_quotient(gn_mul(a, gn_add(b, c)), gn_add(gn_mul(a, b), gn_mul(a, c))).is_holds());
    }
}

TEST_CASE("quotient equality respects the operations") {
    std::mt19937 rng(131);
    std::uniform_real_distribution<double> coef(-1.5, 1.5);
    for (int i = 0; i < 30; ++i) {
        GenNumber a = GenNumber::symbolic(poly(coef(rng), coef(rng)), kLog);
        GenNumber b = GenNumber::symbolic(poly(coef(rng), coef(rng)), kLog);
        GenNumber a2 = GenNumber::symbolic(seq_add(a.sym(), negligible()), kLog);
        GenNumber b2 = GenNumber::symbolic(seq_add(b.sym(), negligible(2.0)), kLog);
        REQUIRE(eq_quotient(a, a2).is_holds());
        CHECK(eq_quotient(gn_add(a, b), gn_add(a2, b2)).is_holds());
        CHECK(eq_quotient(gn_mul(a, b), gn_mul(a2, b2)).is_holds());
    }
}

TEST_CASE("scale mismatch is rejected") {
    GenNumber a = GenNumber::symbolic(poly(0, 1), kLog);
    GenNumber b = GenNumber::symbolic(SymbolicSeq(GrowthClass(0, 0, 1, 0, make_power_scale(2))),
                                      make_power_scale(2));
    CHECK_THROWS_AS(gn_add(a, b), ScaleMismatch);
    CHECK_THROWS_AS(eq_quotient(a, b), ScaleMismatch);
}
