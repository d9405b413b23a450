#include "seqgf/ultranorm.hpp"

#include <algorithm>
#include <cmath>

#include "seqgf/errors.hpp"

namespace seqgf {

namespace {

double powered_value(double p, double rn) {
    if (p < 0) return std::nan("");
    if (p == 0) return 0.0;       // 0^r := 0, including r = 0
    if (rn == 0) return 1.0;      // p^0 = 1 for p > 0
    return std::exp(rn * std::log(p));
}

// Least-squares extrapolation of log(powered value) in the regressors
// {1, r_n, r_n log n, r_n loglog n}; for the symbolic model the fit is
// exact and the extrapolated limit pins the norm.  Returns the limit and
// the max residual, or nothing when the scale has no closed-form L or the
// system degenerates.
struct TailFit {
    double limit;
    double resid;
};

std::optional<TailFit> fit_tail_limit(const std::vector<long>& ns,
                                      const std::vector<double>& logv, const Scale& r) {
    auto L = r.big_l();
    if (!L || std::isinf(*L) || ns.size() < 5) return std::nullopt;
    const int kCols = 4;
    std::size_t m = ns.size();
    std::vector<std::array<double, kCols>> x(m);
    std::array<double, kCols> limits{1.0, 0.0, *L, 0.0};
    for (std::size_t i = 0; i < m; ++i) {
        double n = double(ns[i]);
        double rn = r.eval(n);
        x[i] = {1.0, rn, rn * std::log(n), n >= 3 ? rn * std::log(std::log(n)) : 0.0};
    }
    // drop columns nearly collinear with earlier ones (e.g. r_n log n is
    // constant on log-type scales)
    std::vector<int> keep;
    std::vector<std::vector<double>> basis;
    for (int c = 0; c < kCols; ++c) {
        std::vector<double> col(m);
        for (std::size_t i = 0; i < m; ++i) col[i] = x[i][c];
        std::vector<double> res = col;
        for (const auto& b : basis) {
            double num = 0, den = 0;
            for (std::size_t i = 0; i < m; ++i) {
                num += res[i] * b[i];
                den += b[i] * b[i];
            }
            for (std::size_t i = 0; i < m; ++i) res[i] -= (num / den) * b[i];
        }
        double norm2 = 0, orig2 = 0;
        for (std::size_t i = 0; i < m; ++i) {
            norm2 += res[i] * res[i];
            orig2 += col[i] * col[i];
        }
        if (norm2 > 1e-16 * (orig2 + 1e-300) || c == 0) {
            keep.push_back(c);
            basis.push_back(res);
        }
    }
    // normal equations on the kept columns
    int k = int(keep.size());
    std::vector<std::vector<double>> a(k, std::vector<double>(k + 1, 0.0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            for (std::size_t t = 0; t < m; ++t) a[i][j] += x[t][keep[i]] * x[t][keep[j]];
        for (std::size_t t = 0; t < m; ++t) a[i][k] += x[t][keep[i]] * logv[t];
    }
    for (int p = 0; p < k; ++p) { // gaussian elimination, partial pivot
        int piv = p;
        for (int i = p + 1; i < k; ++i)
            if (std::fabs(a[i][p]) > std::fabs(a[piv][p])) piv = i;
        std::swap(a[p], a[piv]);
        if (std::fabs(a[p][p]) < 1e-300) return std::nullopt;
        for (int i = p + 1; i < k; ++i) {
            double f = a[i][p] / a[p][p];
            for (int j = p; j <= k; ++j) a[i][j] -= f * a[p][j];
        }
    }
    std::vector<double> coef(k);
    for (int i = k - 1; i >= 0; --i) {
        double s = a[i][k];
        for (int j = i + 1; j < k; ++j) s -= a[i][j] * coef[j];
        coef[i] = s / a[i][i];
    }
    double limit = 0;
    for (int i = 0; i < k; ++i) limit += coef[i] * limits[keep[i]];
    double resid = 0;
    for (std::size_t t = 0; t < m; ++t) {
        double fit = 0;
        for (int i = 0; i < k; ++i) fit += coef[i] * x[t][keep[i]];
        resid = std::max(resid, std::fabs(fit - logv[t]));
    }
    return TailFit{limit, resid};
}

} // namespace

UltraNormValue norm_exact(const SymbolicSeq& f, const Scale& r) {
    if (f.is_zero()) return UltraNormValue::exact(0.0);
    const SymbolicSeq* seq = &f;
    std::optional<SymbolicSeq> red;
    if (f.possible_cancellation()) {
        red = f.resolved();
        if (!red) throw AmbiguousDominance("norm of a sum with unresolved cancellation");
        if (red->is_zero()) return UltraNormValue::exact(0.0);
        seq = &*red;
    }
    if (r.is_egorov()) {
        // beyond the 1-run the exponent is 0 and every nonzero entry powers
        // to 1; symbolic terms never vanish
        return UltraNormValue::exact(1.0);
    }
    if (!r.inv_form())
        return UltraNormValue::inconclusive("norm scale has unknown closed form (L unknown)");
    GrowthClass dom = seq->dominant_term();
    double t = dom.log_growth().ratio_limit_over(*r.inv_form());
    if (t == -kInf) return UltraNormValue::exact(0.0);
    if (t == kInf) return UltraNormValue::exact(kInf);
    return UltraNormValue::exact(std::exp(t));
}

UltraNormValue norm_estimate(const std::function<double(long)>& pf, const Scale& r,
                             const IndexLadder& ladder, const EstimatorOptions& opts) {
    IndexLadder lad = r.clamp(ladder);
    if (lad.size() < 3) return UltraNormValue::inconclusive("ladder too short");
    std::vector<double> powered;
    powered.reserve(lad.size());
    for (long n : lad.points) {
        double p = pf(n);
        if (std::isnan(p) || p < 0)
            return UltraNormValue::inconclusive("evaluation failed at n = " + std::to_string(n));
        powered.push_back(powered_value(p, r.eval(double(n))));
    }
    std::size_t w = std::min<std::size_t>(opts.window, powered.size());
    std::vector<double> tail(powered.end() - w, powered.end());
    double hi = *std::max_element(tail.begin(), tail.end());
    double lo = *std::min_element(tail.begin(), tail.end());
    if (std::isinf(hi)) {
        double fin = 0;
        for (double v : powered)
            if (std::isfinite(v)) fin = std::max(fin, v);
        return UltraNormValue::estimated(kInf, fin, kInf);
    }
    double spread = hi - lo;
    if (hi <= opts.tiny)
        return UltraNormValue::estimated(0.0, 0.0, hi + opts.widen * spread);
    if (spread > opts.disagree * hi)
        return UltraNormValue::inconclusive("tail windows disagree: spread " + std::to_string(spread) +
                                            " vs max " + std::to_string(hi));
    double ci_lo = lo, ci_hi = hi;
    // the window alone can sit many spreads away from the limit when the
    // error terms partially cancel across it; extrapolating the powered
    // values in the scale's own regressors recenters the interval
    std::size_t wfit = std::min<std::size_t>(10, powered.size());
    std::vector<long> ns(lad.points.end() - wfit, lad.points.end());
    std::vector<double> logv;
    bool fit_ok = true;
    for (std::size_t i = powered.size() - wfit; i < powered.size(); ++i) {
        if (!(powered[i] > 0)) fit_ok = false;
        else logv.push_back(std::log(powered[i]));
    }
    if (fit_ok) {
        if (auto fit = fit_tail_limit(ns, logv, r); fit && fit->resid < 0.5) {
            double pad = std::exp(fit->resid);
            ci_lo = std::min(ci_lo, fit->limit > 700 ? kInf : std::exp(fit->limit) / pad);
            ci_hi = std::max(ci_hi, fit->limit > 700 ? kInf : std::exp(fit->limit) * pad);
        }
    }
    return UltraNormValue::estimated(hi, std::max(0.0, ci_lo - opts.widen * spread),
                                     ci_hi + opts.widen * spread);
}

UltraNormValue norm_exact_between(const GrowthClass& lo, const GrowthClass& hi,
                                  const std::function<double(long)>& v, const Scale& r,
                                  const IndexLadder& ladder) {
    UltraNormValue nlo = norm_exact(SymbolicSeq(lo), r);
    UltraNormValue nhi = norm_exact(SymbolicSeq(hi), r);
    if (!nlo.is_exact() || !nhi.is_exact() || nlo.value() != nhi.value())
        return UltraNormValue::inconclusive("squeeze bounds have different norms");
    long floor_n = std::max({lo.min_index(), hi.min_index(), r.domain_start()});
    for (long n : ladder.from(floor_n).points) {
        double val = v(n);
        double b_lo = std::exp(lo.eval_log(double(n)));
        double b_hi = std::exp(hi.eval_log(double(n)));
        if (val < b_lo * (1 - 1e-9) || val > b_hi * (1 + 1e-9))
            return UltraNormValue::inconclusive("squeeze bound violated at n = " + std::to_string(n));
    }
    return nlo;
}

std::string seq_class_str(SeqClass c) {
    switch (c) {
        case SeqClass::Moderate: return "moderate";
        case SeqClass::Negligible: return "negligible";
        case SeqClass::ModerateNotNegligible: return "moderate-not-negligible";
        case SeqClass::Unbounded: return "unbounded";
        default: return "inconclusive";
    }
}

SeqClass classify(const SymbolicSeq& f, const Scale& r) {
    UltraNormValue v = norm_exact(f, r);
    if (v.is_inconclusive()) return SeqClass::Inconclusive;
    if (v.value() == 0) return SeqClass::Negligible;
    if (std::isinf(v.value())) return SeqClass::Unbounded;
    return SeqClass::ModerateNotNegligible;
}

SeqClass classify_estimate(const std::function<double(long)>& pf, const Scale& r,
                           const IndexLadder& ladder, const EstimatorOptions& opts) {
    IndexLadder lad = r.clamp(ladder);
    if (lad.size() < 4) return SeqClass::Inconclusive;
    std::vector<double> powered;
    for (long n : lad.points) {
        double p = pf(n);
        if (std::isnan(p) || p < 0) return SeqClass::Inconclusive;
        powered.push_back(powered_value(p, r.eval(double(n))));
    }
    std::size_t k = powered.size();
    bool steep = powered[k - 1] > powered[k - 2] && powered[k - 2] > powered[k - 3];
    if (std::isinf(powered[k - 1]) || (steep && powered[k - 1] > 1e6)) return SeqClass::Unbounded;
    UltraNormValue est = norm_estimate(pf, r, ladder, opts);
    if (est.is_estimated() && std::isfinite(est.ci_high())) return SeqClass::Moderate;
    return SeqClass::Inconclusive;
}

UltraNormValue distance(const SymbolicSeq& f, const SymbolicSeq& g, const Scale& r) {
    return norm_exact(seq_add(f, g.negated()), r);
}

UltraNormValue distance_numeric(const std::function<std::complex<double>(long)>& f,
                                const std::function<std::complex<double>(long)>& g,
                                const Scale& r, const IndexLadder& ladder, const Seminorm& p) {
    auto pf = [&f, &g, &p](long n) { return p.apply(f(n) - g(n)); };
    return norm_estimate(pf, r, ladder);
}

Verdict scale_power_law(const SymbolicSeq& f, const Scale& r, const Scale& s, double C,
                        double rel_tol) {
    auto ratio = equivalent_scale_ratio(s, r);
    if (!ratio || std::fabs(*ratio - C) > 1e-9 * (1 + std::fabs(C)))
        throw PreconditionFailed("scales are not equivalent with ratio C");
    UltraNormValue nr = norm_exact(f, r);
    UltraNormValue ns = norm_exact(f, s);
    if (nr.is_inconclusive() || ns.is_inconclusive())
        return Verdict::inconclusive("norm not available in closed form");
    double want;
    if (nr.value() == 0) want = 0.0;              // 0^C = 0 for C > 0
    else if (std::isinf(nr.value())) want = kInf; // inf^C = inf
    else want = std::pow(nr.value(), C);
    double got = ns.value();
    if (std::isinf(want) || std::isinf(got)) {
        if (std::isinf(want) && std::isinf(got)) return Verdict::holds("both infinite");
        return Verdict::fails({C, got, "one side infinite"});
    }
    if (std::fabs(got - want) <= rel_tol * (1 + std::fabs(want)))
        return Verdict::holds("||f||_s = ||f||_r^C");
    return Verdict::fails({C, got, "expected " + std::to_string(want)});
}

DiagonalResult diagonal_limit(const std::function<double(int, long)>& family, const Scale& r,
                              const IndexLadder& ladder, int mu_max, int m_range) {
    IndexLadder lad = r.clamp(ladder);
    auto powered_diff = [&](int k, int l, long n) {
        double d = std::fabs(family(k, n) - family(l, n));
        return powered_value(d, r.eval(double(n)));
    };
    // sampled tail set: dense near m, geometric to m_range
    auto sample_set = [&](int m) {
        std::vector<int> s;
        for (int i = m; i <= std::min(m + 8, m_range); ++i) s.push_back(i);
        for (int step = 16; m + step <= m_range; step *= 2) s.push_back(m + step);
        if (s.back() != m_range) s.push_back(m_range);
        return s;
    };

    DiagonalResult res;
    int prev_m = 0;
    for (int mu = 0; mu <= mu_max; ++mu) {
        long n_mu = 1L << (mu + 1);
        double bound = std::pow(2.0, -mu);
        int found = -1;
        for (int m = prev_m + 1; m <= m_range && found < 0; ++m) {
            bool ok = true;
            auto s = sample_set(m);
            for (std::size_t i = 0; i < s.size() && ok; ++i)
                for (std::size_t j = i + 1; j < s.size() && ok; ++j)
                    for (long n : lad.points) {
                        if (n < n_mu) continue;
                        double v = powered_diff(s[i], s[j], n);
                        if (!(v < bound)) {
                            ok = false;
                            break;
                        }
                    }
            if (ok) found = m;
        }
        if (found < 0)
            throw NotCauchy("no row index satisfies the 2^-" + std::to_string(mu) +
                            " tail bound within m <= " + std::to_string(m_range));
        res.m_mu.push_back(found);
        res.n_mu.push_back(n_mu);
        prev_m = found;
    }

    auto m_mu = res.m_mu;
    auto n_mu = res.n_mu;
    res.diagonal = [family, m_mu, n_mu](long n) {
        int mu_bar = 0;
        for (std::size_t mu = 0; mu < n_mu.size(); ++mu)
            if (n_mu[mu] <= n) mu_bar = int(mu);
        return family(m_mu[mu_bar], n);
    };

    // verify: for mu <= mu_max-1 every sampled member of the (mu+1)-tail is
    // within 2^-mu of the diagonal, over n >= n_mu
    for (int mu = 0; mu + 1 <= mu_max; ++mu) {
        double bound = std::pow(2.0, -mu);
        for (int m : sample_set(res.m_mu[mu + 1])) {
            for (long n : lad.points) {
                if (n < res.n_mu[mu]) continue;
                double d = std::fabs(family(m, n) - res.diagonal(n));
                double v = powered_value(d, r.eval(double(n)));
                if (!(v < bound)) {
                    res.tail_check = Verdict::fails(
                        {double(n), v, "m = " + std::to_string(m) + ", mu = " + std::to_string(mu)});
                    return res;
                }
            }
        }
    }
    res.tail_check = Verdict::holds("diagonal within 2^-mu of each mu-tail on budget");
    return res;
}

} // namespace seqgf
