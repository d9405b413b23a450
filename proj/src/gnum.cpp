#include "seqgf/gnum.hpp"

#include <algorithm>
#include <cmath>

#include "seqgf/errors.hpp"

namespace seqgf {

GenNumber GenNumber::symbolic(SymbolicSeq rep, Scale scale) {
    GenNumber g(std::move(rep), std::move(scale));
    try {
        UltraNormValue v = norm_exact(g.sym(), g.scale_);
        if (v.is_exact() && std::isinf(v.value()))
            throw NotModerate("symbolic representative has infinite norm");
        if (v.is_exact())
            g.cls_ = v.value() == 0 ? SeqClass::Negligible : SeqClass::ModerateNotNegligible;
        else
            g.cls_ = SeqClass::Inconclusive;
    } catch (const AmbiguousDominance&) {
        g.cls_ = SeqClass::Inconclusive;
    }
    return g;
}

GenNumber GenNumber::callable(Callable rep, Scale scale, const IndexLadder& ladder) {
    GenNumber g(std::move(rep), std::move(scale));
    auto pf = [&g](long n) { return std::abs(std::get<Callable>(g.rep_)(n)); };
    SeqClass c = classify_estimate(pf, g.scale_, ladder);
    if (c == SeqClass::Unbounded) throw NotModerate("tail evidence of an unbounded representative");
    g.cls_ = c;
    return g;
}

GenNumber GenNumber::constant(double c, Scale scale) {
    if (c == 0) return zero(std::move(scale));
    return symbolic(SymbolicSeq(GrowthClass::constant(c, scale)), scale);
}

std::complex<double> GenNumber::eval(long n) const {
    if (is_symbolic()) return {sym().eval(double(n)), 0.0};
    return std::get<Callable>(rep_)(n);
}

UltraNormValue GenNumber::norm(const IndexLadder& ladder) const {
    if (is_symbolic()) return norm_exact(sym(), scale_);
    auto pf = [this](long n) { return std::abs(eval(n)); };
    return norm_estimate(pf, scale_, ladder);
}

SeqClass GenNumber::classification(const IndexLadder& ladder) const {
    // the constructors populate the cache; recompute without writing so
    // concurrent readers stay safe
    if (cls_) return *cls_;
    if (is_symbolic()) return classify(sym(), scale_);
    auto pf = [this](long n) { return std::abs(eval(n)); };
    return classify_estimate(pf, scale_, ladder);
}

namespace {

void require_same_scale(const GenNumber& a, const GenNumber& b) {
    if (!a.scale().same_as(b.scale()))
        throw ScaleMismatch("operands live over different scales");
}

} // namespace

GenNumber gn_add(const GenNumber& a, const GenNumber& b) {
    require_same_scale(a, b);
    if (a.is_symbolic() && b.is_symbolic())
        return GenNumber::symbolic(seq_add(a.sym(), b.sym()), a.scale());
    return GenNumber::callable([a, b](long n) { return a.eval(n) + b.eval(n); }, a.scale());
}

GenNumber gn_mul(const GenNumber& a, const GenNumber& b) {
    require_same_scale(a, b);
    if (a.is_symbolic() && b.is_symbolic())
        return GenNumber::symbolic(seq_mul(a.sym(), b.sym()), a.scale());
    return GenNumber::callable([a, b](long n) { return a.eval(n) * b.eval(n); }, a.scale());
}

GenNumber gn_neg(const GenNumber& a) {
    if (a.is_symbolic()) return GenNumber::symbolic(a.sym().negated(), a.scale());
    return GenNumber::callable([a](long n) { return -a.eval(n); }, a.scale());
}

GenNumber gn_sub(const GenNumber& a, const GenNumber& b) { return gn_add(a, gn_neg(b)); }

GenNumber unit_e_r(const Scale& r, double power) {
    return GenNumber::symbolic(SymbolicSeq(GrowthClass::unit_e(r, power)), r);
}

GenNumber gn_invert(const GenNumber& a) {
    if (!a.is_symbolic() || a.sym().terms().size() != 1)
        throw Unsupported("inversion requires a single-term symbolic representative");
    const GrowthClass& t = a.sym().terms().front();
    if (t.phase() != Phase::Positive || t.sign() != +1)
        throw Unsupported("inversion requires a positive representative bounded below");
    GrowthClass inv(-t.c0(), -t.s(), -t.gamma(), -t.delta(), t.scale_ref());
    return GenNumber::symbolic(SymbolicSeq(inv), a.scale());
}

Verdict eq_quotient(const GenNumber& a, const GenNumber& b, const IndexLadder& ladder) {
    if (!a.scale().same_as(b.scale()))
        throw ScaleMismatch("quotient equality needs a common scale");
    const Scale& r = a.scale();
    if (a.is_symbolic() && b.is_symbolic()) {
        SymbolicSeq diff = seq_add(a.sym(), b.sym().negated());
        SeqClass c;
        try {
            c = classify(diff, r);
        } catch (const AmbiguousDominance&) {
            return Verdict::inconclusive("difference has unresolved cancellation");
        }
        if (c == SeqClass::Negligible) return Verdict::holds("difference negligible (closed form)");
        if (c == SeqClass::Inconclusive) return Verdict::inconclusive("no closed form for the norm");
        // witness: sampled index where the powered difference stays large
        double v = norm_exact(diff, r).value();
        double threshold = std::isinf(v) ? 1.0 : std::min(1.0, v / 2);
        for (long n : r.clamp(ladder, diff.needs_loglog()).points) {
            double d = std::fabs(diff.eval(double(n)));
            double powered = d == 0 ? 0 : std::exp(r.eval(double(n)) * std::log(d));
            if (powered >= threshold)
                return Verdict::fails({double(n), powered, "powered difference above threshold"});
        }
        return Verdict::fails({double(ladder.back()), v, "nonzero norm " + std::to_string(v)});
    }
    // black-box route: only decisive failures, never Holds
    auto pd = [&](long n) { return std::abs(a.eval(n) - b.eval(n)); };
    UltraNormValue est = norm_estimate(pd, r, ladder);
    if (est.is_estimated() && est.ci_low() > 0) {
        long n = ladder.back();
        return Verdict::fails({double(n), est.value(), "tail powered difference bounded away from 0"});
    }
    return Verdict::inconclusive("negligibility of a black-box difference is not decidable from finite data");
}

std::function<double(long)> log_abs_of(const SymbolicSeq& f) {
    return [f](long n) {
        if (f.is_zero()) return -kInf;
        // sums of same-order terms may cancel pointwise; the |value| is
        // what the scan sees either way
        double v = f.eval(double(n));
        return v == 0 ? -kInf : std::log(std::fabs(v));
    };
}

namespace {

std::function<double(long)> log_abs_of_gen(const GenNumber& x) {
    if (x.is_symbolic()) return log_abs_of(x.sym());
    return [x](long n) {
        double v = std::abs(x.eval(n));
        return v == 0 ? -kInf : std::log(v);
    };
}

long gen_min_index(const GenNumber& x) {
    return x.is_symbolic() && !x.sym().is_zero() ? x.sym().min_index() : 2;
}

} // namespace

MaddoxResult maddox_linf_test(const std::function<double(long)>& log_abs, const Scale& r,
                              const IndexLadder& ladder, long k_max) {
    IndexLadder lad = r.clamp(ladder);
    if (lad.size() < 3) return {Verdict::inconclusive("ladder too short"), std::nullopt};
    const double log_tau = std::log(1e-6);
    long n_end = lad.back();
    double r_end = r.eval(double(n_end));
    double lv_end = log_abs(n_end);

    // smallest k with |x_end| k^(-1/r_end) < tau, from the end of the ladder
    long k;
    if (lv_end == -kInf) k = 1;
    else {
        double log_k = r_end * (lv_end - log_tau);
        if (log_k > std::log(double(k_max)))
            return {Verdict::fails({double(n_end), lv_end, "no k <= k_max tames the tail"}),
                    std::nullopt};
        k = log_k <= 0 ? 1 : long(std::floor(std::exp(log_k))) + 1;
    }
    // confirm a decaying tail at this k, escalating if the trend disagrees
    for (; k <= k_max; k *= 2) {
        std::vector<double> tail;
        for (std::size_t i = lad.size() >= 3 ? lad.size() - 3 : 0; i < lad.size(); ++i) {
            long n = lad.points[i];
            double lv = log_abs(n);
            tail.push_back(lv == -kInf ? -kInf : lv - std::log(double(k)) / r.eval(double(n)));
        }
        bool decreasing = true;
        for (std::size_t i = 1; i < tail.size(); ++i)
            if (tail[i] > tail[i - 1] + 1e-12) decreasing = false;
        bool small = tail.back() < log_tau;
        if (decreasing && small)
            return {Verdict::holds("sup bounded; tail decays at k = " + std::to_string(k)), k};
    }
    return {Verdict::fails({double(n_end), lv_end, "no k <= k_max gives a decaying tail"}),
            std::nullopt};
}

MaddoxResult maddox_linf_test(const GenNumber& x, const IndexLadder& ladder, long k_max) {
    return maddox_linf_test(log_abs_of_gen(x), x.scale(), ladder.from(gen_min_index(x)), k_max);
}

MaddoxResult maddox_c0_test(const std::function<double(long)>& log_abs, const Scale& r,
                            const IndexLadder& ladder, long k_max) {
    IndexLadder lad = r.clamp(ladder);
    if (lad.size() < 3) return {Verdict::inconclusive("ladder too short"), std::nullopt};
    const double log_decay = std::log(1e-3);
    const double log_blowup = std::log(1e6);
    bool all_decay = true;
    for (int j = 0;; ++j) {
        long k = j == 0 ? 1 : long(std::ceil(std::exp(double(j))));
        if (k > k_max) break;
        std::vector<double> v;
        for (long n : lad.points) {
            double lv = log_abs(n);
            v.push_back(lv == -kInf ? -kInf : lv + std::log(double(k)) / r.eval(double(n)));
        }
        std::size_t m = v.size();
        bool decays = v[m - 1] < log_decay;
        bool rising = v[m - 1] > v[m - 2] && v[m - 2] > v[m - 3];
        if (v[m - 1] > log_blowup && rising)
            return {Verdict::fails({double(k), v[m - 1], "x_n k^(1/r_n) blows up"}), k};
        if (!decays) all_decay = false;
    }
    if (all_decay) return {Verdict::holds("x_n k^(1/r_n) -> 0 for every sampled k"), std::nullopt};
    return {Verdict::inconclusive("some weights neither decay nor blow up on the ladder"),
            std::nullopt};
}

MaddoxResult maddox_c0_test(const GenNumber& x, const IndexLadder& ladder, long k_max) {
    return maddox_c0_test(log_abs_of_gen(x), x.scale(), ladder.from(gen_min_index(x)), k_max);
}

} // namespace seqgf
