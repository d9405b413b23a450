#include "seqgf/growth.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "seqgf/errors.hpp"

namespace seqgf {

GrowthClass::GrowthClass(double c0, double s, double gamma, double delta, Scale scale_ref,
                         Phase phase, int sign)
    : c0_(c0), s_(s), gamma_(gamma), delta_(delta), phase_(phase), sign_(sign),
      scale_(std::move(scale_ref)) {
    if (sign_ != 1 && sign_ != -1) throw InvalidParameter("sign must be +1 or -1");
    if (s_ != 0 && !scale_.inv_form())
        throw InvalidParameter("growth term with s != 0 needs a scale with closed-form 1/r_n");
}

GrowthClass GrowthClass::constant(double value, Scale scale_ref) {
    if (value == 0) throw InvalidParameter("zero constant is the empty sequence");
    return GrowthClass(std::log(std::fabs(value)), 0, 0, 0, std::move(scale_ref),
                       Phase::Positive, value > 0 ? +1 : -1);
}

GrowthClass GrowthClass::unit_e(const Scale& scale_ref, double power) {
    return GrowthClass(0, power, 0, 0, scale_ref);
}

LogGrowth GrowthClass::log_growth() const {
    LogGrowth g(c0_, gamma_, delta_);
    if (s_ != 0) g.add_form(s_, *scale_.inv_form());
    return g;
}

double GrowthClass::eval_log(double n) const { return log_growth().eval(n); }

double GrowthClass::eval(double n) const {
    double v = sign_ * std::exp(eval_log(n));
    if (phase_ == Phase::Alternating && (long(n) % 2 != 0)) v = -v;
    return v;
}

long GrowthClass::min_index() const {
    long lo = scale_.domain_start();
    if (needs_loglog()) lo = std::max(lo, 3L);
    return lo;
}

GrowthClass GrowthClass::negated() const {
    GrowthClass g = *this;
    g.sign_ = -g.sign_;
    return g;
}

GrowthClass GrowthClass::scaled_by(double lambda) const {
    if (lambda == 0) throw InvalidParameter("scaling a term by zero; use SymbolicSeq::scaled_by");
    GrowthClass g = *this;
    g.c0_ += std::log(std::fabs(lambda));
    if (lambda < 0) g.sign_ = -g.sign_;
    return g;
}

GrowthClass GrowthClass::abs_powed(double k) const {
    if (!(k > 0)) throw InvalidParameter("abs_powed requires k > 0");
    GrowthClass g = *this;
    g.c0_ *= k;
    g.s_ *= k;
    g.gamma_ *= k;
    g.delta_ *= k;
    g.sign_ = +1;
    g.phase_ = Phase::Positive;
    return g;
}

bool GrowthClass::same_shape(const GrowthClass& o) const {
    // compare canonical log-growth, not raw fields: e.g. e^(1/r_n) on the
    // log scale and n are the same sequence with different field tuples
    return log_growth().same_shape(o.log_growth());
}

GrowthClass gc_mul(const GrowthClass& a, const GrowthClass& b) {
    Scale scale = a.scale_ref();
    if (a.s() != 0 && b.s() != 0 && !a.scale_ref().same_as(b.scale_ref()))
        throw ScaleMismatch("product of growth terms on different scales");
    if (a.s() == 0 && b.s() != 0) scale = b.scale_ref();
    // (-1)^n * (-1)^n = 1, so equal phases compose to Positive
    Phase phase = (a.phase() == b.phase()) ? Phase::Positive : Phase::Alternating;
    return GrowthClass(a.c0() + b.c0(), a.s() + b.s(), a.gamma() + b.gamma(),
                       a.delta() + b.delta(), scale, phase, a.sign() * b.sign());
}

SymbolicSeq SymbolicSeq::from_terms(std::vector<GrowthClass> terms) {
    SymbolicSeq s;
    s.terms_ = std::move(terms);
    for (std::size_t i = 0; i < s.terms_.size(); ++i)
        for (std::size_t j = i + 1; j < s.terms_.size(); ++j) {
            const auto& a = s.terms_[i];
            const auto& b = s.terms_[j];
            if (a.same_shape(b) && (a.sign() != b.sign() || a.phase() != b.phase()))
                s.cancel_flag_ = true;
        }
    return s;
}

double SymbolicSeq::eval(double n) const {
    double v = 0;
    for (const auto& t : terms_) v += t.eval(n);
    return v;
}

bool SymbolicSeq::needs_loglog() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const GrowthClass& t) { return t.needs_loglog(); });
}

long SymbolicSeq::min_index() const {
    long lo = 2;
    for (const auto& t : terms_) lo = std::max(lo, t.min_index());
    return lo;
}

SymbolicSeq SymbolicSeq::negated() const {
    std::vector<GrowthClass> t;
    t.reserve(terms_.size());
    for (const auto& g : terms_) t.push_back(g.negated());
    return from_terms(std::move(t));
}

SymbolicSeq SymbolicSeq::scaled_by(double lambda) const {
    if (lambda == 0) return zero();
    std::vector<GrowthClass> t;
    t.reserve(terms_.size());
    for (const auto& g : terms_) t.push_back(g.scaled_by(lambda));
    return from_terms(std::move(t));
}

std::optional<SymbolicSeq> SymbolicSeq::resolved() const {
    if (!cancel_flag_) return *this;
    // Pair off terms with identical shape and phase; net integer
    // multiplicities fold into c0.
    std::vector<bool> used(terms_.size(), false);
    std::vector<GrowthClass> out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (used[i]) continue;
        int net = terms_[i].sign();
        for (std::size_t j = i + 1; j < terms_.size(); ++j) {
            if (used[j]) continue;
            if (terms_[i].same_shape(terms_[j]) && terms_[i].phase() == terms_[j].phase()) {
                net += terms_[j].sign();
                used[j] = true;
            }
        }
        if (net != 0) {
            GrowthClass g = terms_[i];
            if (std::abs(net) != 1) g = g.scaled_by(double(std::abs(net)));
            if ((g.sign() > 0) != (net > 0)) g = g.negated();
            out.push_back(g);
        }
        used[i] = true;
    }
    SymbolicSeq r = from_terms(std::move(out));
    if (r.cancel_flag_) return std::nullopt;
    return r;
}

GrowthClass SymbolicSeq::dominant_term() const {
    const SymbolicSeq* self = this;
    std::optional<SymbolicSeq> red;
    if (cancel_flag_) {
        red = resolved();
        if (!red) throw AmbiguousDominance("sum has unresolved possible cancellation");
        self = &*red;
    }
    if (self->terms_.empty()) throw AmbiguousDominance("zero sequence has no dominant term");
    const GrowthClass* best = &self->terms_.front();
    for (const auto& t : self->terms_) {
        int c = cmp_log_growth(t.log_growth(), best->log_growth());
        if (c > 0 || (c == 0 && t.c0() > best->c0())) best = &t;
    }
    return *best;
}

SymbolicSeq seq_add(const SymbolicSeq& a, const SymbolicSeq& b) {
    std::vector<GrowthClass> t = a.terms();
    t.insert(t.end(), b.terms().begin(), b.terms().end());
    return SymbolicSeq::from_terms(std::move(t));
}

SymbolicSeq seq_mul(const SymbolicSeq& a, const SymbolicSeq& b) {
    std::vector<GrowthClass> t;
    t.reserve(a.terms().size() * b.terms().size());
    for (const auto& x : a.terms())
        for (const auto& y : b.terms()) t.push_back(gc_mul(x, y));
    return SymbolicSeq::from_terms(std::move(t));
}

} // namespace seqgf
