#include <doctest.h>

#include <cmath>
#include <random>

#include "seqgf/torus.hpp"
#include "seqgf/errors.hpp"
#include "oracles.hpp"

using namespace seqgf;

namespace {
const Scale kLog = make_log_scale();
using cd = std::complex<double>;

CoeffFamily random_finite(std::mt19937& rng, long max_deg) {
    std::uniform_int_distribution<long> deg(0, max_deg);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::map<long, cd> s;
    long d = deg(rng);
    for (long k = -d; k <= d; ++k) s[k] = {coef(rng), coef(rng)};
    return CoeffFamily::finite(std::move(s));
}
} // namespace

TEST_CASE("qhat seminorm: exact sups and blowups") {
    CHECK(qhat_lambda(CoeffFamily::geometric(0.5), 1.4) == doctest::Approx(1.0));
    CHECK(std::isinf(qhat_lambda(CoeffFamily::geometric(0.5), 3.0)));
    CHECK(qhat_lambda(CoeffFamily::constant(), 1.0) == doctest::Approx(1.0));
    CHECK(std::isinf(qhat_lambda(CoeffFamily::constant(), 1.01)));

    // oracle: brute-force sup over k <= 1000 for the peaked families
    for (double lambda : {0.5, 0.8}) {
        for (const CoeffFamily& c : {CoeffFamily::power_law(2.0), CoeffFamily::sub_exp(1.0)}) {
            double brute = 0;
            for (long k = 0; k <= 1000; ++k)
                brute = std::max(brute, std::pow(lambda, double(k)) * c.abs_coeff(k));
            CHECK(qhat_lambda(c, lambda) == doctest::Approx(brute));
        }
    }
}

TEST_CASE("annulus sup by boundary sampling") {
    CHECK(q_lambda_numeric(CoeffFamily::monomial(0), 1.7) == doctest::Approx(1.0));
    CHECK(q_lambda_numeric(CoeffFamily::monomial(1), 2.0) == doctest::Approx(2.0));
    CHECK(q_lambda_numeric(CoeffFamily::monomial(-3), 2.0) == doctest::Approx(8.0));
    CHECK_THROWS_AS(q_lambda_numeric(CoeffFamily::constant(), 2.0), Unsupported);
}

TEST_CASE("Cauchy bound and seminorm comparability on random families") {
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        CoeffFamily c = random_finite(rng, 12);
        long d = c.degree();
        for (double lambda : {1.1, 1.5, 2.0}) {
            double q = q_lambda_numeric(c, lambda);
            double qh = qhat_lambda(c, lambda);
            double sum = 0;
            for (long k = -d; k <= d; ++k)
                sum += c.abs_coeff(k) * std::pow(lambda, double(std::labs(k)));
            // coefficients against the annulus sup
            for (long k = -d; k <= d; ++k)
                CHECK(c.abs_coeff(k) <=
                      q * std::pow(lambda, -double(std::labs(k))) * (1 + 1e-6) + 1e-12);
            CHECK(qh <= (2 * d + 1) * q * (1 + 1e-9) + 1e-12);
            CHECK(q <= sum * (1 + 1e-9) + 1e-12);
        }
    }
}

TEST_CASE("two-sided coefficient ultranorms, exact") {
    Scale recip = make_power_scale(1); // r_k = 1/k
    CHECK(pm_norm(CoeffFamily::constant(), kLog) == doctest::Approx(1.0));
    CHECK(pm_norm(CoeffFamily::geometric(0.5), recip) == doctest::Approx(0.5));
    CHECK(pm_norm(CoeffFamily::sub_exp(1.0), recip) == doctest::Approx(1.0));
    CHECK(std::isinf(pm_norm(CoeffFamily::sub_exp(1.0), kLog)));
    CHECK(pm_norm(CoeffFamily::geometric(0.5), kLog) == 0.0);
    CHECK(pm_norm(CoeffFamily::power_law(3.0), kLog) == doctest::Approx(std::exp(3.0)));
    CHECK(pm_norm(CoeffFamily::finite({{2, {1, 0}}, {-5, {3, 0}}}), recip) == 0.0);
}

TEST_CASE("analytic / distribution / hyperfunction trichotomy") {
    CoeffClassification a = classify_coefficients(CoeffFamily::geometric(0.5));
    CHECK(a.label == CoeffClass::Analytic);
    CHECK(a.analytic_norm == doctest::Approx(0.5));

    CoeffClassification d = classify_coefficients(CoeffFamily::constant());
    CHECK(d.label == CoeffClass::Distribution);
    CHECK(d.hyperfunction);
    CHECK(!d.analytic);
    CHECK(d.log_norm == doctest::Approx(1.0));

    CoeffClassification h = classify_coefficients(CoeffFamily::sub_exp(1.0));
    CHECK(h.label == CoeffClass::Hyperfunction);
    CHECK(!h.distribution);
    CHECK(h.analytic_norm == doctest::Approx(1.0));

    CoeffClassification none = classify_coefficients(CoeffFamily::geometric(2.0));
    CHECK(none.label == CoeffClass::None);

    // label monotonicity: analytic => distribution => hyperfunction
    for (const CoeffFamily& c :
         {CoeffFamily::geometric(0.5), CoeffFamily::constant(), CoeffFamily::sub_exp(1.0),
          CoeffFamily::power_law(-2.0), CoeffFamily::power_law(4.0)}) {
        CoeffClassification cc = classify_coefficients(c);
        if (cc.analytic) CHECK(cc.distribution);
        if (cc.distribution) CHECK(cc.hyperfunction);
    }
}

TEST_CASE("embedding truncates at the cutoff and is eventually exact") {
    TorusGF delta = embed(CoeffFamily::constant(), kLog);
    CHECK(embed_cutoff(kLog, 1 << 10) == 6);
    CHECK(delta.at(1 << 10).support().size() == 13);
    CHECK(sup_circle(delta.at(1 << 10)) == doctest::Approx(13.0));

    CoeffFamily p = CoeffFamily::finite({{-3, {1, 0}}, {0, {2, 0}}, {3, {0.5, 0}}});
    TorusGF ep = embed(p, kLog);
    CHECK(ep.at(32).support().size() == 3); // cutoff floor(log 32) = 3 reaches degree 3
    CHECK(ep.at(1 << 10) == p);
    CHECK(ep.at(8).support().size() == 1);  // cutoff 2 keeps only the constant
}

TEST_CASE("squared comb has the triangular coefficient profile") {
    TorusGF delta = embed(CoeffFamily::constant(), kLog);
    TorusGF delta2 = gf_mul(delta, delta);
    long n = 1 << 10;
    long K = embed_cutoff(kLog, n); // 6
    CoeffFamily sq = delta2.at(n);
    CHECK(sq.coeff(0).real() == doctest::Approx(double(2 * K + 1)));
    CHECK(sq.coeff(2 * K).real() == doctest::Approx(1.0));
    CHECK(sq.coeff(2 * K + 1) == cd{0, 0});
    for (long k = 0; k <= 2 * K; ++k)
        CHECK(sq.coeff(k).real() == doctest::Approx(double(2 * K + 1 - k)));
}

TEST_CASE("multiplying by the embedded unit is the identity") {
    CoeffFamily p = CoeffFamily::finite({{-1, {1, 0}}, {2, {3, 0}}});
    TorusGF f = embed(p, kLog);
    TorusGF one = embed(CoeffFamily::monomial(0), kLog);
    CHECK(gf_eq_quotient(gf_mul(f, one), f).is_holds());
}

TEST_CASE("embedding respects products of trigonometric polynomials") {
    CoeffFamily p = CoeffFamily::finite({{-1, {1, 0}}, {1, {1, 0}}});
    CoeffFamily q = CoeffFamily::finite({{0, {2, 0}}, {3, {1, 0}}});
    TorusGF lhs = gf_mul(embed(p, kLog), embed(q, kLog));
    TorusGF rhs = embed(cf_convolve(p, q), kLog);
    CHECK(gf_eq_quotient(lhs, rhs).is_holds());

    // the difference is literally zero once the cutoff passes both degrees
    long n = 1 << 10;
    CHECK(cf_sub(lhs.at(n), rhs.at(n)) == CoeffFamily::zero());
}

TEST_CASE("derivative acts as multiplication by ik") {
    CoeffFamily c = CoeffFamily::finite({{-1, {1, 0}}, {1, {1, 0}}}); // z + 1/z
    CoeffFamily d = c.derivative();
    CHECK(d.coeff(1) == cd{0, 1});
    CHECK(d.coeff(-1) == cd{0, -1});
    CHECK(CoeffFamily::monomial(0).derivative() == CoeffFamily::zero());

    TorusGF delta = embed(CoeffFamily::constant(), kLog);
    TorusGF dd = gf_derivative(delta);
    long n = 1 << 10;
    long K = embed_cutoff(kLog, n);
    CHECK(dd.at(n).coeff(K) == cd{0, double(K)});
    // still moderate under the sup seminorm: sup <= (2K+1) K grows
    // polylogarithmically
    UltraNormValue est = gf_norm_estimate(dd, supnorm_seminorm(512));
    CHECK(est.is_estimated());
    CHECK(est.contains(1.0));
}

TEST_CASE("pairing against a decaying dual element") {
    TorusGF delta = embed(CoeffFamily::constant(), kLog);
    GenNumber paired = pair_gf(delta, CoeffFamily::geometric(0.5));
    // sum over |k| <= K of 2^-|k| = 3 - 2^(1-K)
    long n = 1 << 10;
    CHECK(paired.eval(n).real() == doctest::Approx(3.0 - std::pow(2.0, 1.0 - 6.0)));
    CHECK(paired.eval(1 << 20).real() == doctest::Approx(3.0 - std::pow(2.0, 1.0 - 13.0)));

    TorusGF zero = embed(CoeffFamily::zero(), kLog);
    GenNumber zp = pair_gf(zero, CoeffFamily::geometric(0.5));
    CHECK(std::abs(zp.eval(n)) == 0.0);

    // <embed(z^2), psi> picks out psi-hat(-2) once the cutoff reaches 2
    GenNumber mono = pair_gf(embed(CoeffFamily::monomial(2), kLog), CoeffFamily::geometric(0.5));
    CHECK(mono.eval(1 << 10).real() == doctest::Approx(0.25));
}

TEST_CASE("pairing is bilinear") {
    std::mt19937 rng(55);
    for (int i = 0; i < 20; ++i) {
        CoeffFamily a = random_finite(rng, 6), b = random_finite(rng, 6);
        TorusGF fa = embed(a, kLog), fb = embed(b, kLog);
        CoeffFamily psi = CoeffFamily::geometric(0.5);
        GenNumber lhs = pair_gf(gf_add(fa, fb), psi);
        GenNumber rhs_a = pair_gf(fa, psi), rhs_b = pair_gf(fb, psi);
        for (long n : {16L, 1024L, 1L << 20})
            CHECK(std::abs(lhs.eval(n) - (rhs_a.eval(n) + rhs_b.eval(n))) < 1e-12);
    }
}

TEST_CASE("comb sup norms diverge along the ladder") {
    auto rows = delta_unboundedness_trace(kLog);
    REQUIRE(!rows.empty());
    auto at = [&](long n) {
        for (const auto& r : rows)
            if (r.n == n) return r.p_value;
        return -1.0;
    };
    CHECK(at(1 << 10) == doctest::Approx(13.0));
    CHECK(at(1 << 20) == doctest::Approx(27.0));
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].p_value >= rows[i - 1].p_value);
    CHECK(rows.back().p_value > rows.front().p_value);
}

TEST_CASE("qhat against the annulus sup on embedded truncations") {
    // growing truncations of the comb: both seminorms blow up together
    TorusGF delta = embed(CoeffFamily::constant(), kLog);
    double prev_q = 0, prev_qh = 0;
    for (long n : {1L << 5, 1L << 10, 1L << 15, 1L << 20}) {
        CoeffFamily t = delta.at(n);
        double q = q_lambda_numeric(t, 1.5, 512);
        double qh = qhat_lambda(t, 1.5);
        CHECK(qh <= (2 * t.degree() + 1) * q * (1 + 1e-9));
        CHECK(q >= prev_q);
        CHECK(qh >= prev_qh);
        prev_q = q;
        prev_qh = qh;
    }
}
