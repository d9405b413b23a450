#pragma once

// Canonical extension of maps to the generalized algebras: moderate and
// compatible gauge functions, the two temperateness inequalities, pointwise
// extension, and continuity probes.  Universally quantified conditions are
// checked on declared probe corpora and reported as holds-on-corpus.

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "seqgf/gnum.hpp"
#include "seqgf/ultranorm.hpp"

namespace seqgf {

/// Increasing map on [0, inf), as a small expression over tagged primitives
/// so that composition with symbolic probes stays exact.
class GaugeFn {
public:
    enum class Tag { Identity, Power, Exp, Log1p, Affine, Sum, Product };

    static GaugeFn identity();
    static GaugeFn power(double k);            // x^k, k > 0
    static GaugeFn exponential();              // e^x
    static GaugeFn log1p_gauge();              // log(1+x)
    static GaugeFn affine(double a, double b); // a x + b, a >= 0, b >= 0
    static GaugeFn sum(GaugeFn l, GaugeFn r);
    static GaugeFn product(GaugeFn l, GaugeFn r);

    Tag tag() const { return tag_; }
    double a() const { return a_; }
    double b() const { return b_; }
    const GaugeFn& lhs() const { return *lhs_; }
    const GaugeFn& rhs() const { return *rhs_; }

    double apply(double x) const;
    bool vanishes_at_zero() const; // h(0+) -> 0 on a numeric grid
    std::string label() const;

private:
    Tag tag_ = Tag::Identity;
    double a_ = 1, b_ = 0;
    std::shared_ptr<const GaugeFn> lhs_, rhs_;
};

/// Exact norm of g(|probe|) under the scale r.
UltraNormValue gauge_norm(const GaugeFn& g, const GrowthClass& probe, const Scale& r);

/// Default probe corpus: growth classes with s, gamma in {-2..2} on the
/// given reference scale.
std::vector<GrowthClass> default_probe_grid(const Scale& base);

/// Decaying probes for compatibility checks against log-type families.
std::vector<GrowthClass> default_negligible_probes();

/// Quantifier searches honor the family direction: with rows decreasing in
/// m (case II), moderate means "forall m exists M", compatible means
/// "forall M exists m"; increasing rows (case I) exchange the quantifiers.
Verdict is_r_moderate(const GaugeFn& g, const ScaleFamily& fam,
                      const std::vector<GrowthClass>& probes);
Verdict is_r_compatible(const GaugeFn& h, const ScaleFamily& fam,
                        const std::vector<GrowthClass>& negligible_probes);

struct ElementMap {
    enum class Tag { Square, Linear, Exp };
    Tag tag = Tag::Square;
    double c = 1;

    std::complex<double> apply(std::complex<double> x) const;
    std::string label() const;
};

struct TemperateMapSpec {
    ElementMap phi;
    GaugeFn g;   // condition (a): |phi(f)| <= g(|f|)
    GaugeFn g2;  // condition (b) left factor
    GaugeFn h;   // condition (b) right factor, compatible
};

TemperateMapSpec square_map_spec();
TemperateMapSpec linear_map_spec(double c);
TemperateMapSpec exp_map_spec();

struct TemperateReport {
    Verdict bound_a = Verdict::inconclusive("not run");
    Verdict bound_b = Verdict::inconclusive("not run");
    Verdict g_moderate = Verdict::inconclusive("not run");
    Verdict g2_moderate = Verdict::inconclusive("not run");
    Verdict h_compatible = Verdict::inconclusive("not run");
    Verdict overall = Verdict::inconclusive("not run");
};

TemperateReport check_temperate(const TemperateMapSpec& spec, const ScaleFamily& fam,
                                const std::vector<GrowthClass>& probes,
                                const std::vector<GrowthClass>& negligible_probes);

/// Pointwise application of phi to a representative; the result is checked
/// for moderation (throws NotModerate on failure).
GenNumber extend_map(const TemperateMapSpec& spec, const TemperateReport& report,
                     const GenNumber& x);

struct ContinuityRow {
    double eps;
    double distance;
};

/// ||phi(x + k) - phi(x)|| for perturbations with ||k|| = eps.
std::vector<ContinuityRow> continuity_probe(const TemperateMapSpec& spec, const GenNumber& x,
                                            const std::vector<double>& epsilons);

} // namespace seqgf
