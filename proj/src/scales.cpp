#include "seqgf/scales.hpp"

#include <algorithm>
#include <cmath>

#include "seqgf/errors.hpp"

namespace seqgf {

double Scale::eval(double n) const {
    if (kind_ == Kind::EgorovRow) return n <= param_ ? 1.0 : 0.0;
    if (inv_form_) return 1.0 / inv_form_->value(n);
    return opaque_(n);
}

std::optional<double> Scale::big_l() const {
    if (!inv_form_) return std::nullopt;
    // L = lim (log n) / (1/r_n)
    LogGrowth logn;
    logn.gam = 1.0;
    return logn.ratio_limit_over(*inv_form_);
}

IndexLadder Scale::clamp(const IndexLadder& ladder, bool needs_loglog) const {
    long lo = domain_start_;
    if (needs_loglog) lo = std::max(lo, 3L);
    return ladder.from(lo);
}

Scale Scale::log_scale() {
    Scale s;
    s.kind_ = Kind::Log;
    s.domain_start_ = 2;
    s.inv_form_ = Form::monomial(1.0, Mono{0, 1, 0});
    s.name_ = "1/log(n)";
    return s;
}

Scale Scale::power_scale(double m) {
    if (!(m > 0)) throw InvalidParameter("power scale requires m > 0");
    Scale s;
    s.kind_ = Kind::Power;
    s.param_ = m;
    s.domain_start_ = 2;
    s.inv_form_ = Form::monomial(1.0, Mono{1.0 / m, 0, 0});
    s.name_ = "n^(-1/" + std::to_string(m) + ")";
    return s;
}

Scale Scale::egorov_row(int m) {
    if (m < 0) throw InvalidParameter("Egorov row requires m >= 0");
    Scale s;
    s.kind_ = Kind::EgorovRow;
    s.param_ = m;
    s.domain_start_ = 1;
    s.name_ = "egorov(" + std::to_string(m) + ")";
    return s;
}

Scale Scale::scaled(double c, const Scale& base) {
    if (!(c > 0)) throw InvalidParameter("scale multiplier must be positive");
    if (base.kind_ == Kind::EgorovRow) throw Unsupported("cannot rescale an Egorov row");
    Scale s = base;
    s.kind_ = Kind::Custom;
    s.name_ = std::to_string(c) + "*(" + base.name_ + ")";
    if (base.inv_form_) {
        if (base.inv_form_->level() > 0)
            throw Unsupported("rescaling an iterated-exponential scale");
        // 1/(c*r_n) = (1/c) * (1/r_n)
        s.inv_form_ = Form::monomial(base.inv_form_->coeff() / c, base.inv_form_->mono());
    } else {
        auto e = base.opaque_;
        s.opaque_ = [e, c](double n) { return c * e(n); };
    }
    return s;
}

Scale Scale::log_power(double q) {
    if (!(q > 0)) throw InvalidParameter("log-power scale requires q > 0");
    Scale s;
    s.kind_ = Kind::Custom;
    s.param_ = q;
    s.domain_start_ = 3;
    s.inv_form_ = Form::monomial(1.0, Mono{0, q, 0});
    s.name_ = "1/log(n)^" + std::to_string(q);
    return s;
}

Scale Scale::custom(std::function<double(double)> eval, long domain_start, std::string name) {
    Scale s;
    s.kind_ = Kind::Custom;
    s.domain_start_ = domain_start;
    s.opaque_ = std::move(eval);
    s.name_ = std::move(name);
    return s;
}

Scale Scale::from_inv_form(Form inv, long domain_start, Kind kind, std::string name) {
    if (!inv.growing()) throw DegenerateScale("1/r_n must grow to infinity");
    Scale s;
    s.kind_ = kind;
    s.domain_start_ = domain_start;
    s.inv_form_ = std::move(inv);
    s.name_ = std::move(name);
    return s;
}

bool Scale::same_as(const Scale& o) const {
    if (kind_ == Kind::EgorovRow || o.kind_ == Kind::EgorovRow)
        return kind_ == o.kind_ && param_ == o.param_;
    if (inv_form_ && o.inv_form_)
        return inv_form_->same_key(*o.inv_form_) &&
               (inv_form_->level() > 0 || inv_form_->coeff() == o.inv_form_->coeff());
    return false;
}

ScaleFamily make_egorov_family(int m_max) {
    ScaleFamily f;
    f.direction = ScaleFamily::Direction::CaseI;
    f.m_max = m_max;
    f.row = [](int m) { return Scale::egorov_row(m); };
    f.name = "egorov";
    return f;
}

ScaleFamily make_colombeau_family(int m_max) {
    ScaleFamily f;
    f.direction = ScaleFamily::Direction::CaseII;
    f.m_max = m_max;
    f.row = [](int m) { return Scale::scaled(1.0 / m, Scale::log_scale()); };
    f.name = "colombeau";
    return f;
}

ScaleFamily make_power_row_family(int m_max) {
    ScaleFamily f;
    f.direction = ScaleFamily::Direction::CaseI;
    f.m_max = m_max;
    f.row = [](int m) { return Scale::power_scale(m); };
    f.name = "power-rows";
    return f;
}

AsymptoticScale make_polynomial_asymptotic() {
    AsymptoticScale a;
    a.name = "n^-m";
    a.log_level = [](int m) {
        LogGrowth g;
        g.gam = -double(m);
        return g;
    };
    a.m_witness = [](int m) { return 2 * m + 1; };
    return a;
}

AsymptoticScale make_iterexp_asymptotic(int depth_cap) {
    AsymptoticScale a;
    a.name = "1/exp^m";
    a.m_lo = -depth_cap;
    a.m_hi = depth_cap;
    a.log_level = [](int m) {
        LogGrowth g;
        if (m == 0) return g;
        int depth = std::abs(m) - 1;
        // log a_m = -exp^(m-1)(n) for m >= 1, +exp^(|m|-1)(n) for m <= -1
        Form f = Form::iterated_exp(1.0, Mono{1, 0, 0}, depth);
        g.add_form(m > 0 ? -1.0 : 1.0, f);
        return g;
    };
    a.m_witness = [](int m) { return m + 1; };
    return a;
}

RealAsymptoticScale make_infraexp_asymptotic() {
    RealAsymptoticScale a;
    a.name = "exp(-n*sigma)";
    a.log_level = [](double sigma) {
        LogGrowth g;
        g.add_form(-sigma, Form::monomial(1.0, Mono{1, 0, 0}));
        return g;
    };
    return a;
}

Verdict check_asymptotic_axioms(const AsymptoticScale& a, const IndexLadder& ladder) {
    IndexLadder lad = ladder.from(3);
    for (int m = a.m_lo; m < a.m_hi; ++m) {
        // a_{m+1} = o(a_m), exactly
        LogGrowth d = a.log_level(m + 1);
        d.add(a.log_level(m).negated());
        if (d.limit_sign() >= 0)
            return Verdict::fails({double(m), 0, "a_{m+1} = o(a_m) violated"});
    }
    for (int m = 1; m <= a.m_hi; ++m) {
        LogGrowth sum = a.log_level(-m);
        sum.add(a.log_level(m));
        for (long n : lad.points) {
            double v = sum.eval(double(n));
            if (std::fabs(v) > 1e-9)
                return Verdict::fails({double(n), v, "a_{-m}*a_m != 1 at m=" + std::to_string(m)});
        }
    }
    for (int m = a.m_lo; m <= a.m_hi; ++m) {
        int M = a.m_witness(m);
        if (M < a.m_lo || M > a.m_hi) continue;
        LogGrowth d = a.log_level(M);
        LogGrowth sq = a.log_level(m);
        sq.scale(2.0);
        d.add(sq.negated());
        if (d.limit_sign() >= 0)
            return Verdict::fails({double(m), double(M), "a_M = o(a_m^2) violated"});
    }
    return Verdict::holds("axioms verified on ladder and by order comparison");
}

namespace {

// |log a| as a single growing form; requires the log-growth to be dominated
// by one genuine order (true for every registered rate).
Form abs_log_form(const LogGrowth& la, const IndexLadder& ladder, const std::string& what) {
    for (long n : ladder.from(3).points)
        if (std::fabs(la.eval(double(n))) < 1e-12)
            throw DegenerateScale(what + ": a_m(n) = 1 at sampled n = " + std::to_string(n));
    if (la.exps.size() == 1 && la.gam == 0 && la.del == 0 && la.c0 == 0) {
        auto [c, f] = la.exps.front();
        if (f.level() == 0) return Form::monomial(std::fabs(c) * f.coeff(), f.mono());
        return f; // |(-1)*exp^k(n)| = exp^k(n)
    }
    if (la.exps.empty() && la.gam != 0 && la.del == 0 && la.c0 == 0)
        return Form::monomial(std::fabs(la.gam), Mono{0, 1, 0});
    throw Unsupported(what + ": rate has no single dominant closed form");
}

} // namespace

Scale scale_from_asymptotic(const AsymptoticScale& a, int m) {
    Form inv = abs_log_form(a.log_level(m), default_ladder(), a.name);
    return Scale::from_inv_form(inv, 3, Scale::Kind::FromAsymptotic,
                                "1/|log " + a.name + "| m=" + std::to_string(m));
}

Scale scale_from_asymptotic(const RealAsymptoticScale& a, double sigma) {
    Form inv = abs_log_form(a.log_level(sigma), default_ladder(), a.name);
    return Scale::from_inv_form(inv, 2, Scale::Kind::FromAsymptotic,
                                "1/|log " + a.name + "| sigma=" + std::to_string(sigma));
}

Verdict is_big_O(const Scale& s, const Scale& r, const IndexLadder& ladder) {
    if (s.is_egorov() && r.is_egorov()) {
        // s_n <= r_n pointwise iff the 1-run of s is no longer than r's
        return s.param() <= r.param() ? Verdict::holds("pointwise, C = 1")
                                      : Verdict::fails({s.param(), 1, "longer 1-run"});
    }
    double sup = 0;
    long arg = 0;
    long lo = std::max(s.domain_start(), r.domain_start());
    for (long n : ladder.from(lo).points) {
        double rv = r.eval(double(n));
        if (rv == 0) continue;
        double q = s.eval(double(n)) / rv;
        if (q > sup) {
            sup = q;
            arg = n;
        }
    }
    if (s.inv_form() && r.inv_form()) {
        // s_n/r_n = (1/r_n)/(1/s_n)
        double lim = ratio_limit(*r.inv_form(), *s.inv_form());
        if (std::isinf(lim))
            return Verdict::fails({double(arg), sup, "s_n/r_n unbounded (closed form)"});
        return Verdict::holds("closed-form limit " + std::to_string(lim) +
                              ", sampled sup C = " + std::to_string(sup));
    }
    return Verdict::inconclusive("no closed form; sampled sup C = " + std::to_string(sup));
}

std::optional<double> equivalent_scale_ratio(const Scale& s, const Scale& r) {
    if (!s.inv_form() || !r.inv_form()) return std::nullopt;
    double lim = ratio_limit(*r.inv_form(), *s.inv_form());
    if (lim > 0 && std::isfinite(lim)) return lim;
    return std::nullopt;
}

Verdict check_scale_shape(const Scale& s, const IndexLadder& ladder) {
    IndexLadder lad = s.clamp(ladder);
    double prev = kInf;
    for (long n : lad.points) {
        double v = s.eval(double(n));
        if (!s.is_egorov() && !(v > 0))
            return Verdict::fails({double(n), v, "scale not positive"});
        if (v > prev + 1e-15)
            return Verdict::fails({double(n), v, "scale not non-increasing"});
        prev = v;
    }
    if (!lad.empty() && s.eval(double(lad.back())) > s.eval(double(lad.points.front())) * 0.9 &&
        s.eval(double(lad.back())) > 1e-2 && !s.is_egorov())
        return Verdict::inconclusive("decay to zero not visible on ladder");
    return Verdict::holds("non-increasing on ladder");
}

} // namespace seqgf
