#include "seqgf/association.hpp"

#include <algorithm>
#include <cmath>

#include "seqgf/errors.hpp"

namespace seqgf {

AssocSpec AssocSpec::weak(double s, std::vector<CoeffFamily> d) {
    if (d.empty()) throw InvalidParameter("weak association needs a nonempty test set");
    return {Flavor::Weak, s, std::move(d)};
}

AssocSpec AssocSpec::strong_weak(double s, std::vector<CoeffFamily> d) {
    if (d.empty()) throw InvalidParameter("strong-weak association needs a nonempty test set");
    return {Flavor::StrongWeak, s, std::move(d)};
}

std::string AssocSpec::flavor_str() const {
    switch (flavor) {
        case Flavor::Plain: return "plain";
        case Flavor::S: return "s";
        case Flavor::Strong: return "strong";
        case Flavor::StrongS: return "strong-s";
        case Flavor::Weak: return "weak";
        default: return "strong-weak";
    }
}

std::vector<CoeffFamily> default_testset(int max_mode) {
    std::vector<CoeffFamily> d;
    for (double rho : {0.3, 0.5, 0.8}) d.push_back(CoeffFamily::geometric(rho));
    for (long k = -max_mode; k <= max_mode; ++k) d.push_back(CoeffFamily::monomial(k));
    return d;
}

namespace {

// Tail decision for "v_n -> 0" from log-values on the ladder: a log-log
// slope fit, with a smallness cutoff and an Inconclusive fallback.
Verdict tail_null_from_logs(const std::vector<std::pair<long, double>>& logv) {
    bool all_zero = std::all_of(logv.begin(), logv.end(),
                                [](const auto& p) { return p.second == -kInf; });
    if (all_zero) return Verdict::holds("identically zero tail");
    std::size_t m = logv.size();
    std::size_t lo = m > 10 ? m - 10 : 0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    double max_log = -kInf;
    for (std::size_t i = lo; i < m; ++i) {
        double y = logv[i].second;
        max_log = std::max(max_log, y);
        if (y == -kInf) continue;
        double x = std::log(double(logv[i].first));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++cnt;
    }
    if (max_log < std::log(1e-3)) return Verdict::holds("tail below the smallness cutoff");
    if (cnt < 3) return Verdict::inconclusive("too few usable tail points");
    double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    if (slope <= -0.02) return Verdict::holds("tail decays, slope " + std::to_string(slope));
    if (slope >= 0.02)
        return Verdict::fails({double(logv.back().first), std::exp(logv.back().second),
                               "tail grows, slope " + std::to_string(slope)});
    if (slope > -0.005) {
        double min_log = kInf;
        for (std::size_t i = lo; i < m; ++i) min_log = std::min(min_log, logv[i].second);
        if (min_log > std::log(1e-3))
            return Verdict::fails({double(logv.back().first), std::exp(logv.back().second),
                                   "tail bounded away from 0"});
    }
    return Verdict::inconclusive("tail trend too shallow to decide");
}

// closed-form null test on a symbolic representative, with an extra
// e^(s/r_n) weight folded in
Verdict symbolic_null(const SymbolicSeq& f, const Scale& r, double s) {
    const SymbolicSeq* seq = &f;
    std::optional<SymbolicSeq> red;
    if (f.possible_cancellation()) {
        red = f.resolved();
        if (!red) return Verdict::inconclusive("unresolved cancellation in the difference");
        seq = &*red;
    }
    if (seq->is_zero()) return Verdict::holds("zero representative");
    LogGrowth lg = seq->dominant_term().log_growth();
    if (s != 0) {
        if (!r.inv_form()) return Verdict::inconclusive("scale has no closed form for e^(s/r)");
        lg.add_form(s, *r.inv_form());
    }
    int sign = lg.limit_sign();
    if (sign < 0) return Verdict::holds("log-value tends to -infinity (closed form)");
    if (sign > 0) return Verdict::fails({0, 0, "log-value tends to +infinity (closed form)"});
    return Verdict::fails({0, std::exp(lg.finite_limit()),
                           "value bounded away from zero (limit " +
                               std::to_string(std::exp(lg.finite_limit())) + ")"});
}

Verdict numeric_null(const GenNumber& x, const Scale& r, double s, const IndexLadder& ladder) {
    bool needs_ll = x.is_symbolic() && x.sym().needs_loglog();
    IndexLadder lad = r.clamp(ladder, needs_ll);
    std::vector<std::pair<long, double>> logv;
    for (long n : lad.points) {
        double v = std::abs(x.eval(n));
        double lv = v == 0 ? -kInf : std::log(v);
        if (s != 0) lv += s / r.eval(double(n));
        logv.emplace_back(n, lv);
    }
    return tail_null_from_logs(logv);
}

} // namespace

Verdict null_test(const GenNumber& x, const IndexLadder& ladder) {
    if (x.is_symbolic()) return symbolic_null(x.sym(), x.scale(), 0);
    return numeric_null(x, x.scale(), 0, ladder);
}

Verdict s_assoc(const GenNumber& x, const GenNumber& y, double s, const IndexLadder& ladder) {
    if (!x.scale().same_as(y.scale())) throw ScaleMismatch("s-association needs a common scale");
    if (x.is_symbolic() && y.is_symbolic())
        return symbolic_null(seq_add(x.sym(), y.sym().negated()), x.scale(), s);
    GenNumber diff = gn_sub(x, y);
    return numeric_null(diff, x.scale(), s, ladder);
}

namespace {

Verdict ball_verdict(const UltraNormValue& d, double radius) {
    if (d.is_exact())
        return d.value() < radius
                   ? Verdict::holds("distance " + std::to_string(d.value()) + " < " +
                                    std::to_string(radius))
                   : Verdict::fails({0, d.value(), "distance not below " + std::to_string(radius)});
    if (d.is_estimated()) {
        if (d.ci_high() < radius) return Verdict::holds("distance ci below the radius");
        if (d.ci_low() >= radius)
            return Verdict::fails({0, d.value(), "distance ci above the radius"});
        return Verdict::inconclusive("distance ci straddles the radius");
    }
    return Verdict::inconclusive(d.note());
}

} // namespace

Verdict strong_assoc(const GenNumber& F, const GenNumber& G, double s, const IndexLadder& ladder) {
    if (!F.scale().same_as(G.scale())) throw ScaleMismatch("strong association needs a common scale");
    double radius = std::exp(-s);
    if (F.is_symbolic() && G.is_symbolic())
        return ball_verdict(distance(F.sym(), G.sym(), F.scale()), radius);
    auto fe = [&F](long n) { return F.eval(n); };
    auto ge = [&G](long n) { return G.eval(n); };
    return ball_verdict(distance_numeric(fe, ge, F.scale(), ladder), radius);
}

Verdict strong_assoc_torus(const TorusGF& F, const TorusGF& G,
                           const std::vector<TorusSeminorm>& seminorms, double s,
                           const IndexLadder& ladder) {
    double radius = std::exp(-s);
    for (const auto& p : seminorms) {
        auto pd = [&](long n) { return p.apply(cf_sub(F.at(n), G.at(n))); };
        Verdict v = ball_verdict(norm_estimate(pd, F.scale, ladder), radius);
        if (!v.is_holds()) return v;
    }
    return Verdict::holds("every seminorm distance below e^-s");
}

namespace {

Verdict all_pairings(const TorusGF& F, const TorusGF& G, const std::vector<CoeffFamily>& testset,
                     const IndexLadder& ladder,
                     const std::function<Verdict(const GenNumber&)>& member) {
    bool inconclusive = false;
    std::string note;
    for (std::size_t i = 0; i < testset.size(); ++i) {
        GenNumber pairing = pair_gf(gf_sub(F, G), testset[i], ladder);
        Verdict v = member(pairing);
        if (v.is_fails())
            return Verdict::fails(v.witness() ? *v.witness() : Witness{},
                                  "test function #" + std::to_string(i) + ": " + v.evidence());
        if (v.is_inconclusive()) {
            inconclusive = true;
            note = v.evidence();
        }
    }
    if (inconclusive) return Verdict::inconclusive(note);
    return Verdict::holds("all pairings pass");
}

} // namespace

Verdict weak_assoc(const TorusGF& F, const TorusGF& G, const AssocSpec& spec,
                   const IndexLadder& ladder) {
    return all_pairings(F, G, spec.testset, ladder, [&](const GenNumber& p) {
        return weak_on_rep(p, spec.s, ladder);
    });
}

Verdict strong_weak_assoc(const TorusGF& F, const TorusGF& G, const AssocSpec& spec,
                          const IndexLadder& ladder) {
    return all_pairings(F, G, spec.testset, ladder, [&](const GenNumber& p) {
        return strong_weak_on_rep(p, spec.s, ladder);
    });
}

Verdict weak_on_rep(const GenNumber& pairing, double s, const IndexLadder& ladder) {
    return s_assoc(pairing, GenNumber::zero(pairing.scale()), s, ladder);
}

Verdict strong_weak_on_rep(const GenNumber& pairing, double s, const IndexLadder& ladder) {
    return ball_verdict(pairing.norm(ladder), std::exp(-s));
}

ChainReport implication_chain_on_rep(const GenNumber& pairing, double s, double s_prime,
                                     const IndexLadder& ladder) {
    if (!(s_prime < s)) throw PreconditionFailed("the chain needs s' < s");
    ChainReport r;
    r.strong_weak_s = strong_weak_on_rep(pairing, s, ladder);
    r.weak_s = weak_on_rep(pairing, s, ladder);
    r.strong_weak_sprime = strong_weak_on_rep(pairing, s_prime, ladder);
    if (r.strong_weak_s.is_holds() && r.weak_s.is_fails()) {
        r.violated = true;
        r.detail = "StrongWeak(s) held but Weak(s) failed";
    }
    if (r.weak_s.is_holds() && r.strong_weak_sprime.is_fails()) {
        r.violated = true;
        r.detail = "Weak(s) held but StrongWeak(s') failed";
    }
    return r;
}

ChainReport implication_chain(const TorusGF& F, const TorusGF& G, double s, double s_prime,
                              const std::vector<CoeffFamily>& testset, const IndexLadder& ladder) {
    if (!(s_prime < s)) throw PreconditionFailed("the chain needs s' < s");
    ChainReport r;
    r.strong_weak_s = strong_weak_assoc(F, G, AssocSpec::strong_weak(s, testset), ladder);
    r.weak_s = weak_assoc(F, G, AssocSpec::weak(s, testset), ladder);
    r.strong_weak_sprime = strong_weak_assoc(F, G, AssocSpec::strong_weak(s_prime, testset), ladder);
    if (r.strong_weak_s.is_holds() && r.weak_s.is_fails()) {
        r.violated = true;
        r.detail = "StrongWeak(s) held but Weak(s) failed";
    }
    if (r.weak_s.is_holds() && r.strong_weak_sprime.is_fails()) {
        r.violated = true;
        r.detail = "Weak(s) held but StrongWeak(s') failed";
    }
    return r;
}

Verdict j_assoc(const TorusGF& F, const TorusGF& G, const MemberPredicate& M,
                const std::vector<CoeffFamily>& testset, const IndexLadder& ladder) {
    if (testset.empty()) throw InvalidParameter("J-association needs a nonempty test set");
    return all_pairings(F, G, testset, ladder, M);
}

MemberPredicate member_null(const IndexLadder& ladder) {
    return [ladder](const GenNumber& x) { return null_test(x, ladder); };
}

MemberPredicate member_ball(double radius, const IndexLadder& ladder) {
    return [radius, ladder](const GenNumber& x) { return ball_verdict(x.norm(ladder), radius); };
}

MemberPredicate member_all() {
    return [](const GenNumber&) { return Verdict::holds("every element admitted"); };
}

Verdict check_member_additivity(const MemberPredicate& M,
                                const std::vector<std::pair<GenNumber, GenNumber>>& pairs) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [x, y] = pairs[i];
        if (!M(x).is_holds() || !M(y).is_holds()) continue;
        Verdict sum = M(gn_add(x, y));
        if (sum.is_fails())
            return Verdict::fails({double(i), 0, "M(x) and M(y) held but M(x+y) failed"});
    }
    return Verdict::holds("additive on the sampled pairs");
}

} // namespace seqgf
