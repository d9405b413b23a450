#include <doctest.h>

#include <cmath>
#include <random>

#include "seqgf/growth.hpp"
#include "seqgf/errors.hpp"
#include "oracles.hpp"

using namespace seqgf;

namespace {
const Scale kLog = make_log_scale();

GrowthClass gc(double c0, double s, double gamma, double delta, Phase ph = Phase::Positive,
               int sign = +1) {
    return GrowthClass(c0, s, gamma, delta, kLog, ph, sign);
}
} // namespace

TEST_CASE("gc_mul adds fields componentwise") {
    GrowthClass a = gc(0, 0, 1, 0);                    // n
    GrowthClass b = gc(0, 0, 2, 0);                    // n^2
    GrowthClass p = gc_mul(a, b);
    CHECK(p.gamma() == doctest::Approx(3.0));          // n * n^2 = n^3
    CHECK(p.eval(10) == doctest::Approx(1000.0));

    GrowthClass e1 = GrowthClass::unit_e(kLog);        // e_r
    GrowthClass em1 = GrowthClass::unit_e(kLog, -1.0); // e_r^-1
    GrowthClass one = gc_mul(e1, em1);
    CHECK(one.s() == doctest::Approx(0.0));
    CHECK(one.eval(100) == doctest::Approx(1.0));

    GrowthClass c2 = gc(std::log(2.0), 0, 1, 0);
    GrowthClass c3 = gc(std::log(3.0), 0, 0, 0);
    GrowthClass p2 = gc_mul(c2, c3);
    CHECK(p2.c0() == doctest::Approx(std::log(6.0)));
    CHECK(p2.gamma() == doctest::Approx(1.0));
}

TEST_CASE("gc_mul rejects mismatched scales unless one side is scale-free") {
    GrowthClass on_log = GrowthClass(0, 1, 0, 0, kLog);
    GrowthClass on_pow = GrowthClass(0, 1, 0, 0, make_power_scale(2));
    CHECK_THROWS_AS(gc_mul(on_log, on_pow), ScaleMismatch);
    GrowthClass poly = GrowthClass(0, 0, 2, 0, make_power_scale(2));
    GrowthClass mixed = gc_mul(on_log, poly); // s = 0 side adopts the other scale
    CHECK(mixed.s() == doctest::Approx(1.0));
    CHECK(mixed.scale_ref().same_as(kLog));
}

TEST_CASE("seq_add concatenates and flags exact cancellation") {
    SymbolicSeq s = seq_add(SymbolicSeq(gc(0, 0, 2, 0)), SymbolicSeq(gc(0, 0, 1, 0)));
    CHECK(s.terms().size() == 2);
    CHECK(!s.possible_cancellation());
    CHECK(s.eval(10) == doctest::Approx(110.0));

    GrowthClass f = gc(0, 0, 1, 0, Phase::Alternating);
    SymbolicSeq cancel = seq_add(SymbolicSeq(f), SymbolicSeq(f.negated()));
    CHECK(cancel.possible_cancellation());
    auto red = cancel.resolved();
    REQUIRE(red.has_value());
    CHECK(red->is_zero());

    // e_r + 1 evaluates to n + 1 under the log scale
    SymbolicSeq e_plus_1 =
        seq_add(SymbolicSeq(GrowthClass::unit_e(kLog)), SymbolicSeq(gc(0, 0, 0, 0)));
    CHECK(e_plus_1.eval(64) == doctest::Approx(65.0));
}

TEST_CASE("dominant term by exact growth order") {
    SymbolicSeq s = seq_add(SymbolicSeq(gc(0, 0, 2, 0)), SymbolicSeq(gc(0, 0, 1, 0)));
    CHECK(s.dominant_term().gamma() == doctest::Approx(2.0));

    // e_r * n^-1 has effective log n coefficient 1 - 1 = 0 under the log
    // scale, so n^3 dominates
    SymbolicSeq t = seq_add(SymbolicSeq(gc(0, 1, -1, 0)), SymbolicSeq(gc(0, 0, 3, 0)));
    CHECK(t.dominant_term().gamma() == doctest::Approx(3.0));
    // numeric cross-check at n = 1e6
    CHECK(std::fabs(gc(0, 1, -1, 0).eval(1e6)) < std::fabs(gc(0, 0, 3, 0).eval(1e6)));

    SymbolicSeq single(gc(1.5, 0, -1, 0));
    CHECK(single.dominant_term().c0() == doctest::Approx(1.5));

    GrowthClass f = gc(0, 0, 1, 0);
    SymbolicSeq flagged = seq_add(SymbolicSeq(f), SymbolicSeq(f));
    CHECK(!flagged.possible_cancellation()); // same sign: no flag
    SymbolicSeq bad =
        seq_add(SymbolicSeq(f), SymbolicSeq(GrowthClass(0, 0, 1, 0, kLog, Phase::Alternating)));
    CHECK(bad.possible_cancellation());
    CHECK_THROWS_AS(bad.dominant_term(), AmbiguousDominance);
}

TEST_CASE("cancellation is detected through the canonical form") {
    // e^(1/r_n) on the log scale IS the sequence n: subtracting one from
    // the other must flag and resolve to zero despite different fields
    SymbolicSeq diff = seq_add(SymbolicSeq(gc(0, 0, 1, 0)),
                               SymbolicSeq(GrowthClass::unit_e(kLog).negated()));
    CHECK(diff.possible_cancellation());
    auto red = diff.resolved();
    REQUIRE(red.has_value());
    CHECK(red->is_zero());
    for (long n : {16L, 1024L}) CHECK(std::fabs(diff.eval(double(n))) < 1e-9);
}

TEST_CASE("round-trip: log of eval matches the affine formula") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        GrowthClass g(coef(rng), coef(rng), coef(rng), coef(rng), kLog);
        for (long n : default_ladder().from(g.min_index()).points) {
            double lhs = std::log(std::fabs(g.eval(double(n))));
            double rhs = g.eval_log(double(n));
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("gc_mul is commutative and associative on field tuples") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        GrowthClass a(coef(rng), coef(rng), coef(rng), coef(rng), kLog);
        GrowthClass b(coef(rng), coef(rng), coef(rng), coef(rng), kLog);
        GrowthClass c(coef(rng), coef(rng), coef(rng), coef(rng), kLog);
        GrowthClass ab = gc_mul(a, b), ba = gc_mul(b, a);
        CHECK(ab.c0() == ba.c0());
        CHECK(ab.s() == ba.s());
        CHECK(ab.gamma() == ba.gamma());
        CHECK(ab.delta() == ba.delta());
        GrowthClass l = gc_mul(gc_mul(a, b), c), r = gc_mul(a, gc_mul(b, c));
        CHECK(l.c0() == doctest::Approx(r.c0()).epsilon(1e-14));
        CHECK(l.s() == doctest::Approx(r.s()).epsilon(1e-14));
        CHECK(l.gamma() == doctest::Approx(r.gamma()).epsilon(1e-14));
        CHECK(l.delta() == doctest::Approx(r.delta()).epsilon(1e-14));
    }
}

TEST_CASE("dominant term agrees with numeric argmax at n = 2^20") {
    // half-integer coefficient grid keeps growth orders separated, so the
    // asymptotic winner is already visible at n = 2^20
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> half(-4, 4);
    std::uniform_int_distribution<int> nterms(1, 4);
    const double n = double(1 << 20);
    int checked = 0;
    for (int i = 0; i < 200 && checked < 100; ++i) {
        std::vector<GrowthClass> terms;
        int k = nterms(rng);
        for (int j = 0; j < k; ++j)
            terms.emplace_back(0.5 * half(rng), 0.5 * half(rng), 0.5 * half(rng), 0, kLog);
        bool degenerate = false;
        for (std::size_t a = 0; a < terms.size(); ++a)
            for (std::size_t b = a + 1; b < terms.size(); ++b)
                if (std::fabs((terms[a].s() + terms[a].gamma()) -
                              (terms[b].s() + terms[b].gamma())) < 0.25)
                    degenerate = true;
        if (degenerate) continue;
        SymbolicSeq s = SymbolicSeq::from_terms(terms);
        GrowthClass dom = s.dominant_term();
        double best = -kInf;
        std::size_t arg = 0;
        for (std::size_t j = 0; j < terms.size(); ++j) {
            double lv = terms[j].eval_log(n);
            if (lv > best) {
                best = lv;
                arg = j;
            }
        }
        CHECK(dom.eval_log(n) == doctest::Approx(terms[arg].eval_log(n)));
        double ratio = std::fabs(s.eval(n)) / std::fabs(dom.eval(n));
        CHECK(ratio > 0.5);
        CHECK(ratio < 2.0);
        ++checked;
    }
    CHECK(checked >= 100);
}
