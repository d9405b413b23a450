#include "seqgf/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "seqgf/errors.hpp"

namespace seqgf {

using cd = std::complex<double>;

CoeffFamily CoeffFamily::finite(std::map<long, cd> support) {
    CoeffFamily c;
    c.tag_ = Tag::Finite;
    std::erase_if(support, [](const auto& kv) { return kv.second == cd{0.0, 0.0}; });
    c.coeffs_ = std::move(support);
    return c;
}

CoeffFamily CoeffFamily::monomial(long k, cd v) { return finite({{k, v}}); }

CoeffFamily CoeffFamily::geometric(double rho) {
    if (!(rho > 0)) throw InvalidParameter("geometric family needs rho > 0");
    CoeffFamily c;
    c.tag_ = Tag::Geometric;
    c.param_ = rho;
    return c;
}

CoeffFamily CoeffFamily::constant() {
    CoeffFamily c;
    c.tag_ = Tag::Constant;
    return c;
}

CoeffFamily CoeffFamily::power_law(double alpha) {
    CoeffFamily c;
    c.tag_ = Tag::PowerLaw;
    c.param_ = alpha;
    return c;
}

CoeffFamily CoeffFamily::sub_exp(double beta) {
    if (!(beta > 0)) throw InvalidParameter("sub-exponential family needs beta > 0");
    CoeffFamily c;
    c.tag_ = Tag::SubExp;
    c.param_ = beta;
    return c;
}

cd CoeffFamily::coeff(long k) const {
    switch (tag_) {
        case Tag::Finite: {
            auto it = coeffs_.find(k);
            return it == coeffs_.end() ? cd{0, 0} : it->second;
        }
        case Tag::Geometric: return {std::pow(param_, double(std::labs(k))), 0};
        case Tag::Constant: return {1, 0};
        case Tag::PowerLaw: return {std::pow(1.0 + double(std::labs(k)), param_), 0};
        case Tag::SubExp: return {std::exp(param_ * std::sqrt(double(std::labs(k)))), 0};
    }
    return {0, 0};
}

long CoeffFamily::degree() const {
    if (!is_finite()) throw Unsupported("degree of a closed-form family");
    long d = 0;
    for (const auto& [k, v] : coeffs_) d = std::max(d, std::labs(k));
    return d;
}

const std::map<long, cd>& CoeffFamily::support() const {
    if (!is_finite()) throw Unsupported("support of a closed-form family");
    return coeffs_;
}

CoeffFamily CoeffFamily::truncated(long K) const {
    std::map<long, cd> s;
    if (is_finite()) {
        for (const auto& [k, v] : coeffs_)
            if (std::labs(k) <= K) s[k] = v;
    } else {
        for (long k = -K; k <= K; ++k) s[k] = coeff(k);
    }
    return finite(std::move(s));
}

std::optional<LogGrowth> CoeffFamily::side_log_growth() const {
    LogGrowth g;
    switch (tag_) {
        case Tag::Finite: return std::nullopt;
        case Tag::Geometric:
            g.add_form(std::log(param_), Form::monomial(1.0, Mono{1, 0, 0})); // k log rho
            return g;
        case Tag::Constant: return g;
        case Tag::PowerLaw:
            g.gam = param_; // (1+k)^alpha ~ k^alpha up to a bounded factor
            return g;
        case Tag::SubExp:
            g.add_form(param_, Form::monomial(1.0, Mono{0.5, 0, 0})); // beta sqrt k
            return g;
    }
    return std::nullopt;
}

CoeffFamily CoeffFamily::derivative() const {
    if (!is_finite()) throw Unsupported("derivative of a closed-form family; truncate first");
    std::map<long, cd> s;
    for (const auto& [k, v] : coeffs_) s[k] = v * cd{0, double(k)};
    return finite(std::move(s));
}

CoeffFamily cf_add(const CoeffFamily& a, const CoeffFamily& b) {
    if (!a.is_finite() || !b.is_finite()) throw Unsupported("sum of closed-form families; truncate first");
    std::map<long, cd> s = a.coeffs_;
    for (const auto& [k, v] : b.coeffs_) s[k] += v;
    return CoeffFamily::finite(std::move(s));
}

CoeffFamily cf_sub(const CoeffFamily& a, const CoeffFamily& b) {
    return cf_add(a, cf_scale(b, {-1, 0}));
}

CoeffFamily cf_scale(const CoeffFamily& a, cd c) {
    if (!a.is_finite()) throw Unsupported("scaling a closed-form family; truncate first");
    std::map<long, cd> s = a.coeffs_;
    for (auto& [k, v] : s) v *= c;
    return CoeffFamily::finite(std::move(s));
}

CoeffFamily cf_convolve(const CoeffFamily& a, const CoeffFamily& b) {
    if (!a.is_finite() || !b.is_finite())
        throw Unsupported("convolution needs finite support on both sides; materialize first");
    std::map<long, cd> s;
    for (const auto& [i, u] : a.coeffs_)
        for (const auto& [j, v] : b.coeffs_) s[i + j] += u * v;
    return CoeffFamily::finite(std::move(s));
}

bool CoeffFamily::operator==(const CoeffFamily& o) const {
    if (tag_ != o.tag_) return false;
    if (tag_ != Tag::Finite) return param_ == o.param_;
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (const auto& [k, v] : coeffs_) {
        auto it = o.coeffs_.find(k);
        if (it == o.coeffs_.end() || std::abs(it->second - v) > 1e-12) return false;
    }
    return true;
}

double qhat_lambda(const CoeffFamily& c, double lambda) {
    if (!(lambda > 0)) throw InvalidParameter("qhat needs lambda > 0");
    double llam = std::log(lambda);
    switch (c.tag()) {
        case CoeffFamily::Tag::Finite: {
            double m = 0;
            for (const auto& [k, v] : c.support())
                m = std::max(m, std::exp(llam * double(std::labs(k))) * std::abs(v));
            return m;
        }
        case CoeffFamily::Tag::Geometric: {
            double q = lambda * c.param();
            return q > 1 ? kInf : 1.0; // sup over k of q^k, attained at k = 0
        }
        case CoeffFamily::Tag::Constant:
            return lambda > 1 ? kInf : 1.0;
        case CoeffFamily::Tag::PowerLaw: {
            double alpha = c.param();
            if (lambda > 1) return kInf;
            if (lambda == 1) return alpha > 0 ? kInf : 1.0;
            // single interior maximum of lambda^k (1+k)^alpha
            long k_star = alpha <= 0 ? 0 : long(std::ceil(alpha / -llam));
            double m = 0;
            for (long k = 0; k <= k_star + 2; ++k)
                m = std::max(m, std::exp(llam * k + alpha * std::log1p(double(k))));
            return m;
        }
        case CoeffFamily::Tag::SubExp: {
            double beta = c.param();
            if (lambda >= 1) return kInf;
            double root = beta / (-2 * llam); // sqrt(k) at the maximum
            long k_star = long(std::ceil(root * root));
            double m = 0;
            for (long k = 0; k <= k_star + 2; ++k)
                m = std::max(m, std::exp(llam * k + beta * std::sqrt(double(k))));
            return m;
        }
    }
    return 0;
}

namespace {

double max_abs_on_circle(const CoeffFamily& c, double radius, int samples) {
    const auto& sup = c.support();
    if (sup.empty()) return 0;
    long kmin = sup.begin()->first, kmax = sup.rbegin()->first;
    double best = 0;
    for (int i = 0; i < samples; ++i) {
        double theta = 2.0 * std::numbers::pi * i / samples;
        cd z = std::polar(radius, theta);
        cd zk = std::pow(z, double(kmin));
        cd acc{0, 0};
        for (long k = kmin; k <= kmax; ++k) {
            auto it = sup.find(k);
            if (it != sup.end()) acc += it->second * zk;
            zk *= z;
        }
        best = std::max(best, std::abs(acc));
    }
    return best;
}

} // namespace

double q_lambda_numeric(const CoeffFamily& c, double lambda, int samples) {
    if (!c.is_finite()) throw Unsupported("annulus sup needs a finite family");
    if (!(lambda >= 1)) throw InvalidParameter("annulus radius lambda >= 1");
    return std::max(max_abs_on_circle(c, lambda, samples),
                    max_abs_on_circle(c, 1.0 / lambda, samples));
}

double sup_circle(const CoeffFamily& c, int samples) { return max_abs_on_circle(c, 1.0, samples); }

double deriv_sup_circle(const CoeffFamily& c, int order, int samples) {
    CoeffFamily d = c;
    for (int i = 0; i < order; ++i) d = d.derivative();
    return sup_circle(d, samples);
}

double pm_norm(const CoeffFamily& c, const Scale& r_k) {
    if (c.is_finite()) return 0.0; // one-sided tails are eventually zero
    auto lg = c.side_log_growth();
    if (!lg || !r_k.inv_form()) throw Unsupported("pm-norm needs closed forms on both sides");
    double t = lg->ratio_limit_over(*r_k.inv_form());
    if (t == -kInf) return 0.0;
    if (t == kInf) return kInf;
    return std::exp(t);
}

CoeffClassification classify_coefficients(const CoeffFamily& c) {
    CoeffClassification r{};
    r.analytic_norm = pm_norm(c, make_power_scale(1));
    r.log_norm = pm_norm(c, make_log_scale());
    r.analytic = r.analytic_norm < 1.0;
    r.distribution = std::isfinite(r.log_norm);
    r.hyperfunction = r.analytic_norm <= 1.0;
    if (r.analytic) r.label = CoeffClass::Analytic;
    else if (r.distribution) r.label = CoeffClass::Distribution;
    else if (r.hyperfunction) r.label = CoeffClass::Hyperfunction;
    else r.label = CoeffClass::None;
    return r;
}

std::string coeff_class_str(CoeffClass c) {
    switch (c) {
        case CoeffClass::Analytic: return "analytic";
        case CoeffClass::Distribution: return "distribution";
        case CoeffClass::Hyperfunction: return "hyperfunction";
        default: return "none";
    }
}

long embed_cutoff(const Scale& r, long n) {
    double rn = r.eval(double(n));
    if (!(rn > 0)) throw DegenerateScale("Fourier cutoff needs r_n > 0");
    return long(std::floor(1.0 / rn));
}

TorusGF embed(const CoeffFamily& c, const Scale& r) {
    if (r.is_egorov()) throw DegenerateScale("cannot embed along an Egorov row");
    TorusGF f;
    f.scale = r;
    f.generator = c;
    f.at = [c, r](long n) { return c.truncated(embed_cutoff(r, n)); };
    return f;
}

namespace {

// a finite generator follows the arithmetic, keeping the "difference is
// eventually zero" route decidable for embedded polynomials
std::optional<CoeffFamily> combine_generators(const TorusGF& f, const TorusGF& g,
                                              CoeffFamily (*op)(const CoeffFamily&,
                                                                const CoeffFamily&)) {
    if (f.generator && g.generator && f.generator->is_finite() && g.generator->is_finite())
        return op(*f.generator, *g.generator);
    return std::nullopt;
}

CoeffFamily cf_add_fn(const CoeffFamily& a, const CoeffFamily& b) { return cf_add(a, b); }
CoeffFamily cf_sub_fn(const CoeffFamily& a, const CoeffFamily& b) { return cf_sub(a, b); }
CoeffFamily cf_conv_fn(const CoeffFamily& a, const CoeffFamily& b) { return cf_convolve(a, b); }

} // namespace

TorusGF gf_add(const TorusGF& f, const TorusGF& g) {
    if (!f.scale.same_as(g.scale)) throw ScaleMismatch("torus elements on different scales");
    TorusGF h;
    h.scale = f.scale;
    h.at = [f, g](long n) { return cf_add(f.at(n), g.at(n)); };
    h.generator = combine_generators(f, g, cf_add_fn);
    return h;
}

TorusGF gf_sub(const TorusGF& f, const TorusGF& g) {
    if (!f.scale.same_as(g.scale)) throw ScaleMismatch("torus elements on different scales");
    TorusGF h;
    h.scale = f.scale;
    h.at = [f, g](long n) { return cf_sub(f.at(n), g.at(n)); };
    h.generator = combine_generators(f, g, cf_sub_fn);
    return h;
}

TorusGF gf_mul(const TorusGF& f, const TorusGF& g) {
    if (!f.scale.same_as(g.scale)) throw ScaleMismatch("torus elements on different scales");
    TorusGF h;
    h.scale = f.scale;
    h.at = [f, g](long n) { return cf_convolve(f.at(n), g.at(n)); };
    h.generator = combine_generators(f, g, cf_conv_fn);
    return h;
}

TorusGF gf_derivative(const TorusGF& f) {
    TorusGF h;
    h.scale = f.scale;
    h.at = [f](long n) { return f.at(n).derivative(); };
    return h;
}

GenNumber pair_gf(const TorusGF& f, const CoeffFamily& psi, const IndexLadder& ladder) {
    auto rep = [f, psi](long n) {
        CoeffFamily fn = f.at(n);
        cd acc{0, 0};
        for (const auto& [k, v] : fn.support()) acc += v * psi.coeff(-k);
        return acc;
    };
    return GenNumber::callable(rep, f.scale, ladder);
}

TorusSeminorm supnorm_seminorm(int samples) {
    return {"sup", [samples](const CoeffFamily& c) { return sup_circle(c, samples); }};
}

std::vector<TorusSeminorm> derivative_seminorms(int max_order, int samples) {
    std::vector<TorusSeminorm> v;
    for (int nu = 0; nu <= max_order; ++nu)
        v.push_back({"sup_d" + std::to_string(nu), [nu, samples](const CoeffFamily& c) {
                         return deriv_sup_circle(c, nu, samples);
                     }});
    return v;
}

UltraNormValue gf_norm_estimate(const TorusGF& f, const TorusSeminorm& p,
                                const IndexLadder& ladder) {
    auto pf = [&f, &p](long n) { return p.apply(f.at(n)); };
    return norm_estimate(pf, f.scale, ladder);
}

Verdict gf_eq_quotient(const TorusGF& f, const TorusGF& g, const IndexLadder& ladder) {
    IndexLadder lad = f.scale.clamp(ladder);
    // structural route: both sides generated by finite families whose
    // truncations stabilize once the cutoff passes both degrees
    if (f.generator && g.generator && f.generator->is_finite() && g.generator->is_finite()) {
        long need = std::max(f.generator->degree(), g.generator->degree());
        bool stable_seen = false;
        for (long n : lad.points) {
            CoeffFamily d = cf_sub(f.at(n), g.at(n));
            if (embed_cutoff(f.scale, n) >= need) {
                stable_seen = true;
                if (!(d == CoeffFamily::zero()))
                    return Verdict::fails({double(n), sup_circle(d), "difference persists past cutoff"});
            }
        }
        if (stable_seen) return Verdict::holds("difference eventually zero (truncation identity)");
    }
    auto pd = [&](long n) { return sup_circle(cf_sub(f.at(n), g.at(n))); };
    UltraNormValue est = norm_estimate(pd, f.scale, lad);
    if (est.is_estimated() && est.ci_low() > 0)
        return Verdict::fails({double(lad.back()), est.value(), "sup-seminorm difference bounded away from 0"});
    return Verdict::inconclusive("no structural identity; finite data cannot certify negligibility");
}

std::vector<TraceRow> delta_unboundedness_trace(const Scale& r, const IndexLadder& ladder) {
    std::vector<TraceRow> rows;
    for (long n : r.clamp(ladder).points) {
        long K = embed_cutoff(r, n);
        double sup = double(2 * K + 1); // Dirichlet kernel peak at z = 1
        double rn = r.eval(double(n));
        rows.push_back({n, sup, std::exp(rn * std::log(sup))});
    }
    return rows;
}

} // namespace seqgf
