#include "seqgf/functorial.hpp"

#include <algorithm>
#include <cmath>

#include "seqgf/errors.hpp"

namespace seqgf {

GaugeFn GaugeFn::identity() { return GaugeFn(); }

GaugeFn GaugeFn::power(double k) {
    if (!(k > 0)) throw InvalidParameter("power gauge needs k > 0");
    GaugeFn g;
    g.tag_ = Tag::Power;
    g.a_ = k;
    return g;
}

GaugeFn GaugeFn::exponential() {
    GaugeFn g;
    g.tag_ = Tag::Exp;
    return g;
}

GaugeFn GaugeFn::log1p_gauge() {
    GaugeFn g;
    g.tag_ = Tag::Log1p;
    return g;
}

GaugeFn GaugeFn::affine(double a, double b) {
    if (a < 0 || b < 0) throw InvalidParameter("affine gauge needs a, b >= 0");
    GaugeFn g;
    g.tag_ = Tag::Affine;
    g.a_ = a;
    g.b_ = b;
    return g;
}

GaugeFn GaugeFn::sum(GaugeFn l, GaugeFn r) {
    GaugeFn g;
    g.tag_ = Tag::Sum;
    g.lhs_ = std::make_shared<GaugeFn>(std::move(l));
    g.rhs_ = std::make_shared<GaugeFn>(std::move(r));
    return g;
}

GaugeFn GaugeFn::product(GaugeFn l, GaugeFn r) {
    GaugeFn g;
    g.tag_ = Tag::Product;
    g.lhs_ = std::make_shared<GaugeFn>(std::move(l));
    g.rhs_ = std::make_shared<GaugeFn>(std::move(r));
    return g;
}

double GaugeFn::apply(double x) const {
    switch (tag_) {
        case Tag::Identity: return x;
        case Tag::Power: return std::pow(x, a_);
        case Tag::Exp: return std::exp(x);
        case Tag::Log1p: return std::log1p(x);
        case Tag::Affine: return a_ * x + b_;
        case Tag::Sum: return lhs_->apply(x) + rhs_->apply(x);
        case Tag::Product: return lhs_->apply(x) * rhs_->apply(x);
    }
    return x;
}

bool GaugeFn::vanishes_at_zero() const {
    double prev = kInf;
    for (double x = 1e-1; x >= 1e-14; x /= 10) {
        double v = apply(x);
        if (v > prev + 1e-15) return false;
        prev = v;
    }
    return apply(1e-14) < 1e-6;
}

std::string GaugeFn::label() const {
    switch (tag_) {
        case Tag::Identity: return "x";
        case Tag::Power: return "x^" + std::to_string(a_);
        case Tag::Exp: return "exp(x)";
        case Tag::Log1p: return "log(1+x)";
        case Tag::Affine: return std::to_string(a_) + "x+" + std::to_string(b_);
        case Tag::Sum: return "(" + lhs_->label() + ")+(" + rhs_->label() + ")";
        case Tag::Product: return "(" + lhs_->label() + ")*(" + rhs_->label() + ")";
    }
    return "?";
}

namespace {

// subtract log of a growing form from a log-growth expression
void subtract_log_of_form(LogGrowth& d, const Form& f) {
    if (f.level() == 0) {
        const Mono& m = f.mono();
        d.c0 -= std::log(f.coeff());
        d.gam -= m.n_exp;
        d.del -= m.log_exp;
        // loglog powers in a scale form would need a third slot; none of
        // the registered scales carry one
        if (m.loglog_exp != 0) throw Unsupported("denominator with a loglog factor");
        return;
    }
    if (f.level() == 1) {
        d.add_form(-f.coeff(), Form::monomial(1.0, f.mono()));
        return;
    }
    Form lowered = Form::iterated_exp(f.coeff(), f.mono(), f.level() - 1);
    d.add_form(-1.0, lowered);
}

// log of the dominant order of a growing log-growth expression, lowered by
// one logarithm (used for log(1+f) with f -> infinity)
LogGrowth log_lowered(const LogGrowth& lg) {
    LogGrowth h;
    double best_coeff = 0;
    const Form* best = nullptr;
    Form glog = Form::monomial(1.0, Mono{0, 1, 0});
    Form gllog = Form::monomial(1.0, Mono{0, 0, 1});
    auto consider = [&](double c, const Form& f) {
        if (c == 0 || !f.growing()) return;
        if (!best || f.cmp_order(*best) > 0) {
            best = &f;
            best_coeff = c;
        }
    };
    for (const auto& [c, f] : lg.exps) consider(c, f);
    consider(lg.gam, glog);
    consider(lg.del, gllog);
    if (!best) return h;
    h.c0 = std::log(std::fabs(best_coeff));
    if (best->same_key(glog)) {
        h.del = 1; // log(c log n) = log c + loglog n
        return h;
    }
    if (best->same_key(gllog)) return h; // below loglog: constant-order here
    if (best->level() == 0) {
        h.c0 += std::log(best->coeff());
        h.gam = best->mono().n_exp;
        h.del = best->mono().log_exp;
        return h;
    }
    if (best->level() == 1) {
        h.add_form(best->coeff(), Form::monomial(1.0, best->mono()));
        return h;
    }
    h.add_form(1.0, Form::iterated_exp(best->coeff(), best->mono(), best->level() - 1));
    return h;
}

UltraNormValue norm_from_t(double t) {
    if (t == -kInf) return UltraNormValue::exact(0.0);
    if (t == kInf) return UltraNormValue::exact(kInf);
    return UltraNormValue::exact(std::exp(t));
}

} // namespace

UltraNormValue gauge_norm(const GaugeFn& g, const GrowthClass& probe, const Scale& r) {
    GrowthClass p = probe.abs_powed(1.0);
    switch (g.tag()) {
        case GaugeFn::Tag::Identity: return norm_exact(SymbolicSeq(p), r);
        case GaugeFn::Tag::Power: return norm_exact(SymbolicSeq(p.abs_powed(g.a())), r);
        case GaugeFn::Tag::Affine: {
            std::vector<GrowthClass> terms;
            if (g.a() > 0) terms.push_back(p.scaled_by(g.a()));
            if (g.b() > 0) terms.push_back(GrowthClass::constant(g.b(), p.scale_ref()));
            if (terms.empty()) return UltraNormValue::exact(0.0);
            return norm_exact(SymbolicSeq::from_terms(terms), r);
        }
        case GaugeFn::Tag::Sum: {
            // powered values of a sum of nonneg sequences converge to the
            // max of the two limits
            UltraNormValue l = gauge_norm(g.lhs(), probe, r);
            UltraNormValue rv = gauge_norm(g.rhs(), probe, r);
            if (!l.is_exact() || !rv.is_exact())
                return UltraNormValue::inconclusive("composite gauge on an undecided branch");
            return UltraNormValue::exact(std::max(l.value(), rv.value()));
        }
        case GaugeFn::Tag::Product: {
            UltraNormValue l = gauge_norm(g.lhs(), probe, r);
            UltraNormValue rv = gauge_norm(g.rhs(), probe, r);
            if (!l.is_exact() || !rv.is_exact())
                return UltraNormValue::inconclusive("composite gauge on an undecided branch");
            bool zero = l.value() == 0 || rv.value() == 0;
            bool inf = std::isinf(l.value()) || std::isinf(rv.value());
            if (zero && inf) return UltraNormValue::inconclusive("0 * inf in a product gauge");
            return UltraNormValue::exact(l.value() * rv.value());
        }
        default: break;
    }
    if (!r.inv_form()) return UltraNormValue::inconclusive("scale without closed form");
    LogGrowth lg = p.log_growth();
    int sign = lg.limit_sign();
    if (g.tag() == GaugeFn::Tag::Exp) {
        if (sign <= 0) return UltraNormValue::exact(1.0); // e^bounded powers to 1
        LogGrowth d = lg;
        subtract_log_of_form(d, *r.inv_form());
        int s2 = d.limit_sign();
        if (s2 > 0) return UltraNormValue::exact(kInf);
        if (s2 < 0) return UltraNormValue::exact(1.0);
        return norm_from_t(std::exp(d.finite_limit()));
    }
    if (g.tag() == GaugeFn::Tag::Log1p) {
        if (sign < 0) return norm_exact(SymbolicSeq(p), r); // log(1+f) ~ f
        if (sign == 0) return UltraNormValue::exact(1.0);
        LogGrowth h = log_lowered(lg);
        return norm_from_t(h.ratio_limit_over(*r.inv_form()));
    }
    return UltraNormValue::inconclusive("gauge shape not analyzed");
}

std::vector<GrowthClass> default_probe_grid(const Scale& base) {
    std::vector<GrowthClass> probes;
    for (int s = -2; s <= 2; ++s)
        for (int g = -2; g <= 2; ++g) probes.emplace_back(0.0, double(s), double(g), 0.0, base);
    return probes;
}

std::vector<GrowthClass> default_negligible_probes() {
    std::vector<GrowthClass> probes;
    Scale lp2 = Scale::log_power(2);
    for (double k : {0.5, 1.0, 2.0}) probes.emplace_back(0.0, -k, 0.0, 0.0, lp2);
    probes.emplace_back(0.0, -1.0, 0.0, 0.0, make_power_scale(2)); // e^-sqrt(n)
    return probes;
}

namespace {

bool norm_finite(const UltraNormValue& v) { return v.is_exact() && std::isfinite(v.value()); }
bool norm_zero(const UltraNormValue& v) { return v.is_exact() && v.value() == 0; }

} // namespace

Verdict is_r_moderate(const GaugeFn& g, const ScaleFamily& fam,
                      const std::vector<GrowthClass>& probes) {
    bool flip = fam.direction == ScaleFamily::Direction::CaseI;
    // forall u exists e: g maps the row-u moderate probes into row-e
    // moderation; case I exchanges which side of the map is quantified
    for (int u = fam.m_min; u <= fam.m_max; ++u) {
        bool found = false;
        for (int e = fam.m_min; e <= fam.m_max && !found; ++e) {
            int src = flip ? e : u;
            int dst = flip ? u : e;
            Scale row_src = fam.row(src);
            Scale row_dst = fam.row(dst);
            bool ok = true;
            for (const auto& p : probes) {
                if (!norm_finite(norm_exact(SymbolicSeq(p.abs_powed(1.0)), row_src))) continue;
                UltraNormValue gv = gauge_norm(g, p, row_dst);
                if (!norm_finite(gv)) {
                    ok = false;
                    break;
                }
            }
            if (ok) found = true;
        }
        if (!found)
            return Verdict::fails({double(u), 0,
                                   std::string(flip ? "no source row m for target M=" : "no target row M for m=") +
                                       std::to_string(u)});
    }
    return Verdict::holds("moderation preserved on the probe corpus");
}

Verdict is_r_compatible(const GaugeFn& h, const ScaleFamily& fam,
                        const std::vector<GrowthClass>& negligible_probes) {
    if (!h.vanishes_at_zero())
        return Verdict::fails({0, h.apply(0.0), "not continuous at 0 with h(0) = 0"});
    bool flip = fam.direction == ScaleFamily::Direction::CaseI;
    // compatible: forall M exists m (case II); exchanged in case I
    for (int u = fam.m_min; u <= fam.m_max; ++u) {
        bool found = false;
        for (int e = fam.m_min; e <= fam.m_max && !found; ++e) {
            int src = flip ? u : e;
            int dst = flip ? e : u;
            Scale row_src = fam.row(src);
            Scale row_dst = fam.row(dst);
            bool ok = true;
            bool any = false;
            for (const auto& p : negligible_probes) {
                if (!norm_zero(norm_exact(SymbolicSeq(p.abs_powed(1.0)), row_src))) continue;
                any = true;
                UltraNormValue hv = gauge_norm(h, p, row_dst);
                if (!norm_zero(hv)) {
                    ok = false;
                    break;
                }
            }
            if (ok && any) found = true;
        }
        if (!found)
            return Verdict::fails({double(u), 0, "no row maps the negligible probes into row " +
                                                     std::to_string(u)});
    }
    return Verdict::holds("negligibility preserved on the probe corpus");
}

std::complex<double> ElementMap::apply(std::complex<double> x) const {
    switch (tag) {
        case Tag::Square: return x * x;
        case Tag::Linear: return c * x;
        case Tag::Exp: return std::exp(x);
    }
    return x;
}

std::string ElementMap::label() const {
    switch (tag) {
        case Tag::Square: return "square";
        case Tag::Linear: return "linear:" + std::to_string(c);
        case Tag::Exp: return "exp";
    }
    return "?";
}

TemperateMapSpec square_map_spec() {
    return {{ElementMap::Tag::Square, 1}, GaugeFn::power(2), GaugeFn::affine(2, 1),
            GaugeFn::identity()};
}

TemperateMapSpec linear_map_spec(double c) {
    double a = std::fabs(c);
    return {{ElementMap::Tag::Linear, c}, GaugeFn::affine(a, 0), GaugeFn::affine(a, a),
            GaugeFn::identity()};
}

TemperateMapSpec exp_map_spec() {
    return {{ElementMap::Tag::Exp, 1}, GaugeFn::exponential(), GaugeFn::exponential(),
            GaugeFn::affine(std::exp(1.0), 0)};
}

namespace {

std::vector<std::complex<double>> carrier_grid() {
    std::vector<std::complex<double>> xs{{0, 0}};
    for (double v = 1e-6; v <= 1e6; v *= 10) {
        xs.push_back({v, 0});
        xs.push_back({-v, 0});
        xs.push_back({0, v});
        xs.push_back({v / 2, -v / 2});
    }
    return xs;
}

std::vector<std::complex<double>> perturbation_grid() {
    std::vector<std::complex<double>> ks;
    for (double v = 1e-8; v <= 1.0; v *= 10) {
        ks.push_back({v, 0});
        ks.push_back({-v, 0});
        ks.push_back({0, v});
    }
    return ks;
}

} // namespace

TemperateReport check_temperate(const TemperateMapSpec& spec, const ScaleFamily& fam,
                                const std::vector<GrowthClass>& probes,
                                const std::vector<GrowthClass>& negligible_probes) {
    TemperateReport rep;
    const double slack = 1e-9;

    rep.bound_a = Verdict::holds("grid check");
    for (auto x : carrier_grid()) {
        double lhs = std::abs(spec.phi.apply(x));
        double rhs = spec.g.apply(std::abs(x));
        if (lhs > rhs * (1 + slack) + 1e-12) {
            rep.bound_a = Verdict::fails({std::abs(x), lhs, "bound (a) violated"});
            break;
        }
    }

    rep.bound_b = Verdict::holds("grid check, |k| <= 1");
    for (auto x : carrier_grid()) {
        for (auto k : perturbation_grid()) {
            std::complex<double> fx = spec.phi.apply(x);
            std::complex<double> fxk = spec.phi.apply(x + k);
            double lhs = std::abs(fxk - fx);
            double rhs = spec.g2.apply(std::abs(x)) * spec.h.apply(std::abs(k));
            // the finite difference cannot be resolved below rounding noise
            // of the function values themselves
            double noise = 1e-12 * (std::abs(fx) + std::abs(fxk) + 1);
            if (lhs > rhs * (1 + slack) + noise) {
                rep.bound_b = Verdict::fails({std::abs(x), lhs,
                                              "bound (b) violated at |k| = " + std::to_string(std::abs(k))});
                break;
            }
        }
        if (rep.bound_b.is_fails()) break;
    }

    rep.g_moderate = is_r_moderate(spec.g, fam, probes);
    rep.g2_moderate = is_r_moderate(spec.g2, fam, probes);
    rep.h_compatible = is_r_compatible(spec.h, fam, negligible_probes);

    if (rep.bound_a.is_holds() && rep.bound_b.is_holds() && rep.g_moderate.is_holds() &&
        rep.g2_moderate.is_holds() && rep.h_compatible.is_holds())
        rep.overall = Verdict::holds("continuously temperate on the probe corpus");
    else if (rep.g_moderate.is_fails() || rep.h_compatible.is_fails() || rep.bound_a.is_fails() ||
             rep.bound_b.is_fails() || rep.g2_moderate.is_fails()) {
        const Verdict& src = rep.g_moderate.is_fails()    ? rep.g_moderate
                             : rep.h_compatible.is_fails() ? rep.h_compatible
                             : rep.bound_a.is_fails()      ? rep.bound_a
                             : rep.bound_b.is_fails()      ? rep.bound_b
                                                           : rep.g2_moderate;
        rep.overall = Verdict::fails(src.witness() ? *src.witness() : Witness{}, src.evidence());
    } else
        rep.overall = Verdict::inconclusive("some condition undecided on the corpus");
    return rep;
}

GenNumber extend_map(const TemperateMapSpec& spec, const TemperateReport& report,
                     const GenNumber& x) {
    if (!report.overall.is_holds())
        throw PreconditionFailed("extension requires a temperate map: " + report.overall.evidence());
    switch (spec.phi.tag) {
        case ElementMap::Tag::Square: return gn_mul(x, x);
        case ElementMap::Tag::Linear:
            if (x.is_symbolic())
                return GenNumber::symbolic(x.sym().scaled_by(spec.phi.c), x.scale());
            return GenNumber::callable([x, c = spec.phi.c](long n) { return c * x.eval(n); },
                                       x.scale());
        case ElementMap::Tag::Exp:
            return GenNumber::callable([x](long n) { return std::exp(x.eval(n)); }, x.scale());
    }
    throw Unsupported("unknown element map");
}

std::vector<ContinuityRow> continuity_probe(const TemperateMapSpec& spec, const GenNumber& x,
                                            const std::vector<double>& epsilons) {
    std::vector<ContinuityRow> rows;
    for (double eps : epsilons) {
        if (!(eps > 0) || eps >= 1) throw InvalidParameter("epsilon in (0,1)");
        GenNumber k = unit_e_r(x.scale(), std::log(eps)); // ||k|| = eps
        GenNumber moved = extend_map(spec, TemperateReport{.overall = Verdict::holds("caller")},
                                     gn_add(x, k));
        GenNumber base = extend_map(spec, TemperateReport{.overall = Verdict::holds("caller")}, x);
        GenNumber d = gn_sub(moved, base);
        rows.push_back({eps, d.norm().value()});
    }
    return rows;
}

} // namespace seqgf
