#pragma once

// Symbolic growth-order kernel.
//
// Every exact computation in the library reduces to limits of expressions
//
//     log |f_n| = c0 + gam*log n + del*loglog n + sum_i coeff_i * F_i(n)
//
// where each F_i is a "form": a monomial n^a (log n)^b (loglog n)^g, or an
// iterated exponential exp^(k-1)(exp(c * monomial)).  Scales enter as the
// form of 1/r_n.  Limits of ratios and differences of such expressions are
// decided by lexicographic comparison of growth orders, which keeps norms,
// o()/O() tests and dominance decisions exact instead of sampled.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "seqgf/common.hpp"
#include "seqgf/errors.hpp"

namespace seqgf {

namespace detail {
inline bool near(double a, double b) { return std::fabs(a - b) <= 1e-12 * (1.0 + std::fabs(a) + std::fabs(b)); }
} // namespace detail

/// Exponent triple of n^a (log n)^b (loglog n)^g.
struct Mono {
    double n_exp = 0;
    double log_exp = 0;
    double loglog_exp = 0;

    bool is_one() const { return n_exp == 0 && log_exp == 0 && loglog_exp == 0; }

    /// -1, 0, +1: does the monomial tend to 0, 1 or infinity.
    int growth_sign() const {
        if (!detail::near(n_exp, 0)) return n_exp > 0 ? 1 : -1;
        if (!detail::near(log_exp, 0)) return log_exp > 0 ? 1 : -1;
        if (!detail::near(loglog_exp, 0)) return loglog_exp > 0 ? 1 : -1;
        return 0;
    }

    /// Lexicographic order comparison: -1, 0, +1 as this grows slower,
    /// equally, faster than other.
    int cmp(const Mono& o) const {
        if (!detail::near(n_exp, o.n_exp)) return n_exp < o.n_exp ? -1 : 1;
        if (!detail::near(log_exp, o.log_exp)) return log_exp < o.log_exp ? -1 : 1;
        if (!detail::near(loglog_exp, o.loglog_exp)) return loglog_exp < o.loglog_exp ? -1 : 1;
        return 0;
    }

    bool operator==(const Mono& o) const { return cmp(o) == 0; }

    double log_value(double n) const {
        double lv = n_exp * std::log(n);
        if (log_exp != 0) lv += log_exp * std::log(std::log(n));
        if (loglog_exp != 0) lv += loglog_exp * std::log(std::log(std::log(n)));
        return lv;
    }
    double value(double n) const { return std::exp(log_value(n)); }

    Mono pow(double e) const { return {n_exp * e, log_exp * e, loglog_exp * e}; }
    Mono times(const Mono& o) const { return {n_exp + o.n_exp, log_exp + o.log_exp, loglog_exp + o.loglog_exp}; }

    std::string str() const;
};

/// A positive closed-form quantity with decidable growth order.
///   level == 0 : coeff * mono(n), coeff > 0
///   level >= 1 : exp^(level-1)( exp(coeff * mono(n)) ), inner mono growing
class Form {
public:
    static Form constant(double c) {
        if (!(c > 0)) throw InvalidParameter("Form constant must be positive");
        Form f;
        f.level_ = 0;
        f.coeff_ = c;
        return f;
    }

    static Form monomial(double coeff, Mono m) {
        if (!(coeff > 0)) throw InvalidParameter("level-0 form coefficient must be positive");
        Form f;
        f.level_ = 0;
        f.coeff_ = coeff;
        f.mono_ = m;
        return f;
    }

    /// exp(F), canonicalized: exp(c*log n) folds to n^c, exp(c*loglog n) to
    /// (log n)^c, exp of a constant to a constant.
    static Form exp_of(const Form& f) {
        Form r;
        if (f.level_ == 0) {
            const Mono& m = f.mono_;
            if (f.coeff_ == 0) return constant(1.0);
            if (m.is_one()) return constant(std::exp(f.coeff_));
            if (detail::near(m.n_exp, 0) && detail::near(m.log_exp, 1) && detail::near(m.loglog_exp, 0))
                return monomial(1.0, Mono{f.coeff_, 0, 0});
            if (detail::near(m.n_exp, 0) && detail::near(m.log_exp, 0) && detail::near(m.loglog_exp, 1))
                return monomial(1.0, Mono{0, f.coeff_, 0});
            if (m.growth_sign() <= 0) throw Unsupported("exp of a non-growing form");
            r.level_ = 1;
            r.coeff_ = f.coeff_;
            r.mono_ = m;
            return r;
        }
        r = f;
        r.level_ = f.level_ + 1;
        return r;
    }

    /// exp applied `depth` times to coeff*mono.
    static Form iterated_exp(double coeff, Mono m, int depth) {
        Form f = monomial(std::fabs(coeff), m);
        f.coeff_ = coeff; // allow signed inner coefficient before wrapping
        if (depth <= 0) {
            if (!(coeff > 0)) throw InvalidParameter("level-0 form coefficient must be positive");
            return f;
        }
        for (int i = 0; i < depth; ++i) f = exp_of(f);
        return f;
    }

    int level() const { return level_; }
    double coeff() const { return coeff_; }
    const Mono& mono() const { return mono_; }

    /// Does the form tend to +infinity?
    bool growing() const {
        if (level_ == 0) return mono_.growth_sign() > 0;
        return coeff_ > 0; // inner mono growing by construction
    }
    /// Does the form tend to 0?
    bool vanishing() const {
        if (level_ == 0) return mono_.growth_sign() < 0;
        return coeff_ < 0;
    }

    double log_value(double n) const {
        if (level_ == 0) return std::log(coeff_) + mono_.log_value(n);
        double inner = coeff_ * mono_.value(n);
        for (int i = 1; i < level_; ++i) inner = std::exp(inner);
        return inner;
    }
    double value(double n) const { return std::exp(log_value(n)); }

    Form pow(double e) const {
        Form r = *this;
        if (level_ == 0) {
            r.coeff_ = std::pow(coeff_, e);
            r.mono_ = mono_.pow(e);
            return r;
        }
        if (level_ == 1) {
            r.coeff_ = coeff_ * e;
            return r;
        }
        throw Unsupported("power of a doubly-exponential form");
    }

    Form times(const Form& o) const {
        if (level_ == 0 && o.level_ == 0)
            return monomial(coeff_ * o.coeff_, mono_.times(o.mono_));
        if (level_ == 1 && o.level_ == 1 && mono_ == o.mono_)
            return iterated_exp(coeff_ + o.coeff_, mono_, 1);
        throw Unsupported("product of incompatible forms");
    }

    /// Growth-order comparison of two growing forms: -1, 0, +1.
    /// Equal order means the ratio tends to a finite positive constant.
    int cmp_order(const Form& o) const {
        if (level_ != o.level_) return level_ < o.level_ ? -1 : 1;
        int mc = mono_.cmp(o.mono_);
        if (level_ == 0) return mc;
        if (mc != 0) return mc;
        if (detail::near(coeff_, o.coeff_)) return 0;
        return coeff_ < o.coeff_ ? -1 : 1;
    }

    bool same_key(const Form& o) const {
        if (level_ != o.level_ || !(mono_ == o.mono_)) return false;
        if (level_ == 0) return true;
        return detail::near(coeff_, o.coeff_);
    }

    std::string str() const;

private:
    int level_ = 0;
    double coeff_ = 1.0;
    Mono mono_{};
};

/// lim F/G for growing positive forms, in [0, inf]; finite values are exact.
inline double ratio_limit(const Form& f, const Form& g) {
    int c = f.cmp_order(g);
    if (c < 0) return 0.0;
    if (c > 0) return kInf;
    if (f.level() == 0) return f.coeff() / g.coeff();
    return 1.0;
}

/// Affine symbolic log-growth: c0 + gam*log n + del*loglog n + sum c_i*F_i(n).
/// Sums and scalar multiples stay in the class; limits are decided exactly.
class LogGrowth {
public:
    double c0 = 0;
    double gam = 0;
    double del = 0;
    std::vector<std::pair<double, Form>> exps;

    LogGrowth() = default;
    LogGrowth(double c0_, double gam_, double del_) : c0(c0_), gam(gam_), del(del_) {}

    /// Add coeff*F, folding log/loglog/constant monomials into the affine
    /// slots so that every stored entry has a distinct genuine order.
    void add_form(double coeff, const Form& f) {
        if (coeff == 0) return;
        if (f.level() == 0) {
            double total = coeff * f.coeff();
            const Mono& m = f.mono();
            if (m.is_one()) {
                c0 += total;
                return;
            }
            if (detail::near(m.n_exp, 0) && detail::near(m.log_exp, 1) && detail::near(m.loglog_exp, 0)) {
                gam += total;
                return;
            }
            if (detail::near(m.n_exp, 0) && detail::near(m.log_exp, 0) && detail::near(m.loglog_exp, 1)) {
                del += total;
                return;
            }
            Form unit = Form::monomial(1.0, m);
            merge(total, unit);
            return;
        }
        merge(coeff, f);
    }

    void add(const LogGrowth& o) {
        c0 += o.c0;
        gam += o.gam;
        del += o.del;
        for (const auto& [c, f] : o.exps) merge(c, f);
    }

    void scale(double k) {
        c0 *= k;
        gam *= k;
        del *= k;
        for (auto& [c, f] : exps) c *= k;
        prune();
    }

    LogGrowth negated() const {
        LogGrowth r = *this;
        r.scale(-1.0);
        return r;
    }

    double eval(double n) const {
        double v = c0 + gam * std::log(n);
        if (del != 0) v += del * std::log(std::log(n));
        for (const auto& [c, f] : exps) v += c * f.value(n);
        return v;
    }

    /// Sign of the limit as n -> infinity: -1 (-> -inf), 0 (finite), +1 (-> +inf).
    int limit_sign() const {
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
        for (const auto& [c, f] : exps) consider(c, f);
        consider(gam, glog);
        consider(del, gllog);
        if (best) return best_coeff > 0 ? 1 : -1;
        return 0;
    }

    /// Finite limit (valid when limit_sign() == 0).  Vanishing entries
    /// contribute nothing.
    double finite_limit() const { return c0; }

    /// lim of this(n) / denom(n) for a growing positive form denom.
    /// Returns a value in [-inf, +inf]; finite values are exact.
    double ratio_limit_over(const Form& denom) const {
        if (!denom.growing()) throw InvalidParameter("ratio denominator must grow to infinity");
        double finite = 0;
        double best_coeff = 0;
        const Form* best = nullptr;
        Form glog = Form::monomial(1.0, Mono{0, 1, 0});
        Form gllog = Form::monomial(1.0, Mono{0, 0, 1});
        auto consider = [&](double c, const Form& f) {
            if (c == 0 || !f.growing()) return;
            int rel = f.cmp_order(denom);
            if (rel > 0) {
                if (!best || f.cmp_order(*best) > 0) {
                    best = &f;
                    best_coeff = c;
                }
            } else if (rel == 0) {
                finite += (f.level() == 0) ? c * f.coeff() / denom.coeff() : c;
            }
        };
        for (const auto& [c, f] : exps) consider(c, f);
        consider(gam, glog);
        consider(del, gllog);
        if (best) return best_coeff > 0 ? kInf : -kInf;
        return finite;
    }

    bool same_shape(const LogGrowth& o) const {
        if (!detail::near(c0, o.c0) || !detail::near(gam, o.gam) || !detail::near(del, o.del)) return false;
        if (exps.size() != o.exps.size()) return false;
        for (const auto& [c, f] : exps) {
            bool found = false;
            for (const auto& [oc, of] : o.exps)
                if (f.same_key(of) && detail::near(c, oc)) found = true;
            if (!found) return false;
        }
        return true;
    }

    std::string str() const;

private:
    void merge(double coeff, const Form& f) {
        for (auto& [c, g] : exps) {
            if (g.same_key(f)) {
                c += coeff;
                prune();
                return;
            }
        }
        exps.emplace_back(coeff, f);
    }

    void prune() {
        std::erase_if(exps, [](const auto& e) { return e.first == 0; });
    }
};

/// Dominance between two log-growths: -1, 0, +1 as a's value grows slower,
/// comparably (bounded ratio both ways), or faster than b's.
inline int cmp_log_growth(const LogGrowth& a, const LogGrowth& b) {
    LogGrowth d = a;
    d.add(b.negated());
    return d.limit_sign();
}

inline std::string Mono::str() const {
    std::string s;
    auto piece = [&](double e, const char* base) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += base;
        if (e != 1) s += "^" + std::to_string(e);
    };
    piece(n_exp, "n");
    piece(log_exp, "log(n)");
    piece(loglog_exp, "loglog(n)");
    return s.empty() ? "1" : s;
}

inline std::string Form::str() const {
    if (level_ == 0) {
        if (mono_.is_one()) return std::to_string(coeff_);
        if (coeff_ == 1.0) return mono_.str();
        return std::to_string(coeff_) + "*" + mono_.str();
    }
    std::string inner = std::to_string(coeff_) + "*" + mono_.str();
    std::string s = inner;
    for (int i = 0; i < level_; ++i) s = "exp(" + s + ")";
    return s;
}

inline std::string LogGrowth::str() const {
    std::string s = std::to_string(c0);
    if (gam != 0) s += " + " + std::to_string(gam) + "*log(n)";
    if (del != 0) s += " + " + std::to_string(del) + "*loglog(n)";
    for (const auto& [c, f] : exps) s += " + " + std::to_string(c) + "*" + f.str();
    return s;
}

} // namespace seqgf
