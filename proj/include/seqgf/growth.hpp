#pragma once

// Symbolic representative sequences.  A GrowthClass is a sequence whose
// logarithm is affine in 1/rho_n, log n and loglog n for a reference scale
// rho; sums of such terms (SymbolicSeq) are closed under the ring operations
// and give closed-form answers for every norm and association test.

#include <optional>
#include <vector>

#include "seqgf/forms.hpp"
#include "seqgf/scales.hpp"

namespace seqgf {

enum class Phase { Positive, Alternating };

class GrowthClass {
public:
    /// value(n) = sign * phase(n) * exp(c0 + s/rho_n + gamma*log n + delta*loglog n)
    GrowthClass(double c0, double s, double gamma, double delta, Scale scale_ref,
                Phase phase = Phase::Positive, int sign = +1);

    static GrowthClass constant(double value, Scale scale_ref);
    /// e_r = (e^(1/r_n))_n, the positive unit generator.
    static GrowthClass unit_e(const Scale& scale_ref, double power = 1.0);

    double c0() const { return c0_; }
    double s() const { return s_; }
    double gamma() const { return gamma_; }
    double delta() const { return delta_; }
    Phase phase() const { return phase_; }
    int sign() const { return sign_; }
    const Scale& scale_ref() const { return scale_; }

    LogGrowth log_growth() const;
    double eval_log(double n) const;   // log |value|
    double eval(double n) const;       // signed value (may overflow to +-inf)

    bool needs_loglog() const { return delta_ != 0; }
    long min_index() const;

    GrowthClass negated() const;
    GrowthClass scaled_by(double lambda) const;     // lambda != 0
    GrowthClass abs_powed(double k) const;          // |value|^k, k > 0

    /// Identical |value| sequence (all shape fields match).
    bool same_shape(const GrowthClass& o) const;

private:
    double c0_, s_, gamma_, delta_;
    Phase phase_;
    int sign_;
    Scale scale_;
};

/// Representative-level product; phases compose, shape fields add.
GrowthClass gc_mul(const GrowthClass& a, const GrowthClass& b);

class SymbolicSeq {
public:
    SymbolicSeq() = default; // canonical zero sequence
    SymbolicSeq(GrowthClass term) : terms_{std::move(term)} {}

    static SymbolicSeq zero() { return SymbolicSeq(); }
    static SymbolicSeq from_terms(std::vector<GrowthClass> terms);

    bool is_zero() const { return terms_.empty(); }
    bool possible_cancellation() const { return cancel_flag_; }
    const std::vector<GrowthClass>& terms() const { return terms_; }

    double eval(double n) const;
    bool needs_loglog() const;
    long min_index() const;

    SymbolicSeq negated() const;
    SymbolicSeq scaled_by(double lambda) const;     // lambda = 0 gives zero

    /// Term with the fastest-growing |value|; growth orders are compared
    /// exactly, c0 breaks ties.  Throws AmbiguousDominance when a flagged
    /// cancellation cannot be resolved by exact pairing.
    GrowthClass dominant_term() const;

    /// Decision-only reduction: pairs off terms with identical shape and
    /// phase.  Returns the reduced sequence, or nullopt when possible
    /// cancellation remains.  Never used to simplify user-visible values.
    std::optional<SymbolicSeq> resolved() const;

private:
    std::vector<GrowthClass> terms_;
    bool cancel_flag_ = false;
};

SymbolicSeq seq_add(const SymbolicSeq& a, const SymbolicSeq& b);
SymbolicSeq seq_mul(const SymbolicSeq& a, const SymbolicSeq& b);

} // namespace seqgf
