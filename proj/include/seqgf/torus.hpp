#pragma once

// Generalized functions on the unit circle through Fourier coefficients:
// coefficient families with closed-form decay/growth, the q^lambda and
// q-hat seminorms, the analytic/distribution/hyperfunction trichotomy, the
// Fourier-cutoff embedding, products by convolution, and dual pairings.

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "seqgf/gnum.hpp"
#include "seqgf/ultranorm.hpp"

namespace seqgf {

class CoeffFamily {
public:
    enum class Tag { Finite, Geometric, Constant, PowerLaw, SubExp };

    static CoeffFamily finite(std::map<long, std::complex<double>> support);
    static CoeffFamily monomial(long k, std::complex<double> c = 1.0); // c * z^k
    static CoeffFamily zero() { return finite({}); }
    static CoeffFamily geometric(double rho);   // rho^|k|
    static CoeffFamily constant();              // 1 (the Dirac comb spectrum)
    static CoeffFamily power_law(double alpha); // (1+|k|)^alpha
    static CoeffFamily sub_exp(double beta);    // e^(beta sqrt|k|)

    Tag tag() const { return tag_; }
    bool is_finite() const { return tag_ == Tag::Finite; }
    double param() const { return param_; }

    std::complex<double> coeff(long k) const;
    double abs_coeff(long k) const { return std::abs(coeff(k)); }

    /// Finite families: largest |k| with a nonzero coefficient (0 if empty).
    long degree() const;
    const std::map<long, std::complex<double>>& support() const;

    /// Restriction to |k| <= K, materialized as a finite family.
    CoeffFamily truncated(long K) const;

    /// log |c_k| as a function of k >= 1 (families are symmetric in k).
    /// Absent for finite families, whose one-sided tails vanish.
    std::optional<LogGrowth> side_log_growth() const;

    CoeffFamily derivative() const; // c_k -> i k c_k (finite only)

    friend CoeffFamily cf_add(const CoeffFamily& a, const CoeffFamily& b);
    friend CoeffFamily cf_sub(const CoeffFamily& a, const CoeffFamily& b);
    friend CoeffFamily cf_scale(const CoeffFamily& a, std::complex<double> c);
    friend CoeffFamily cf_convolve(const CoeffFamily& a, const CoeffFamily& b);

    bool operator==(const CoeffFamily& o) const;

private:
    Tag tag_ = Tag::Finite;
    double param_ = 0;
    std::map<long, std::complex<double>> coeffs_;
};

/// q-hat seminorm: sup over k of lambda^|k| |c_k|; exact sup or +inf.
double qhat_lambda(const CoeffFamily& c, double lambda);

/// Sup of the Laurent polynomial over the annulus 1/lambda < |z| < lambda,
/// realized as the max over the two boundary circles (maximum principle).
double q_lambda_numeric(const CoeffFamily& c, double lambda, int samples = 4096);

/// L-infinity norm on the unit circle (sampled).
double sup_circle(const CoeffFamily& c, int samples = 4096);
/// sup |f^(order)| on the unit circle.
double deriv_sup_circle(const CoeffFamily& c, int order, int samples = 4096);

/// Two-sided coefficient ultranorm: max of the two one-sided limsups of
/// |c_(+-k)|^(r_k).  Exact for tagged families; finite families give 0.
double pm_norm(const CoeffFamily& c, const Scale& r_k);

enum class CoeffClass { Analytic, Distribution, Hyperfunction, None };

struct CoeffClassification {
    double analytic_norm;     // pm-norm at r_k = 1/k
    double log_norm;          // pm-norm at r_k = 1/log k
    bool analytic;            // analytic_norm < 1
    bool distribution;        // log_norm < inf
    bool hyperfunction;       // analytic_norm <= 1
    CoeffClass label;         // strongest applicable
};

CoeffClassification classify_coefficients(const CoeffFamily& c);
std::string coeff_class_str(CoeffClass c);

/// A generalized function on the circle: one coefficient family per index.
struct TorusGF {
    std::function<CoeffFamily(long)> at;
    Scale scale;
    std::optional<CoeffFamily> generator; // set by embed()

    CoeffFamily operator()(long n) const { return at(n); }
};

/// Fourier cutoff K_n = floor(1/r_n).
long embed_cutoff(const Scale& r, long n);

/// Convolution with the Fourier cutoff mollifier: index n keeps |k| <= K_n.
TorusGF embed(const CoeffFamily& c, const Scale& r);

TorusGF gf_add(const TorusGF& f, const TorusGF& g);
TorusGF gf_sub(const TorusGF& f, const TorusGF& g);
TorusGF gf_mul(const TorusGF& f, const TorusGF& g);
TorusGF gf_derivative(const TorusGF& f);

/// <f, psi> as a generalized number: n -> sum_k fhat_n(k) psihat(-k).
GenNumber pair_gf(const TorusGF& f, const CoeffFamily& psi,
                  const IndexLadder& ladder = default_ladder());

struct TorusSeminorm {
    std::string name;
    std::function<double(const CoeffFamily&)> apply;
};

TorusSeminorm supnorm_seminorm(int samples = 4096);
std::vector<TorusSeminorm> derivative_seminorms(int max_order, int samples = 4096);

UltraNormValue gf_norm_estimate(const TorusGF& f, const TorusSeminorm& p,
                                const IndexLadder& ladder = default_ladder());

/// Quotient equality of two torus elements: structural "difference is
/// eventually zero" when both truncations stabilize, else a sup-seminorm
/// estimate (which never certifies Holds).
Verdict gf_eq_quotient(const TorusGF& f, const TorusGF& g,
                       const IndexLadder& ladder = default_ladder());

struct TraceRow {
    long n;
    double p_value;
    double powered_value;
};

/// (n, sup-norm of the embedded Dirac comb, powered value): the sup norms
/// are 2 K_n + 1 and diverge, witnessing that no bounded set contains the
/// delta net.
std::vector<TraceRow> delta_unboundedness_trace(const Scale& r,
                                                const IndexLadder& ladder = default_ladder());

} // namespace seqgf
