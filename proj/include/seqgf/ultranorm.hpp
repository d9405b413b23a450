#pragma once

// The norm engine: ||f||_{p,r} = limsup p(f_n)^{r_n}, evaluated exactly for
// symbolic sequences and estimated from tail windows for black-box ones.
// Also: ultrametric distances, moderate/negligible classification, the
// equivalent-scale power law, and the diagonal completeness construction.

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "seqgf/common.hpp"
#include "seqgf/growth.hpp"
#include "seqgf/scales.hpp"

namespace seqgf {

class UltraNormValue {
public:
    enum class Mode { Exact, Estimated, Inconclusive };

    static UltraNormValue exact(double v) { return {Mode::Exact, v, v, v, {}}; }
    static UltraNormValue estimated(double v, double lo, double hi) { return {Mode::Estimated, v, lo, hi, {}}; }
    static UltraNormValue inconclusive(std::string note) {
        return {Mode::Inconclusive, 0, 0, kInf, std::move(note)};
    }

    Mode mode() const { return mode_; }
    bool is_exact() const { return mode_ == Mode::Exact; }
    bool is_estimated() const { return mode_ == Mode::Estimated; }
    bool is_inconclusive() const { return mode_ == Mode::Inconclusive; }

    double value() const { return value_; }
    double ci_low() const { return ci_low_; }
    double ci_high() const { return ci_high_; }
    const std::string& note() const { return note_; }

    bool contains(double v) const { return v >= ci_low_ && v <= ci_high_; }

    std::string mode_str() const {
        switch (mode_) {
            case Mode::Exact: return "exact";
            case Mode::Estimated: return "estimated";
            default: return "inconclusive";
        }
    }

private:
    UltraNormValue(Mode m, double v, double lo, double hi, std::string note)
        : mode_(m), value_(v), ci_low_(lo), ci_high_(hi), note_(std::move(note)) {}

    Mode mode_;
    double value_;
    double ci_low_, ci_high_;
    std::string note_;
};

/// Seminorm on the scalar carrier.
struct Seminorm {
    std::string name;
    std::function<double(const std::complex<double>&)> apply;
    std::optional<double> submult;
};

inline Seminorm abs_seminorm() {
    return {"abs", [](const std::complex<double>& z) { return std::abs(z); }, 1.0};
}

struct EstimatorOptions {
    int window = 6;          // tail points entering the limsup heuristic
    double widen = 20.0;     // ci widening in units of window spread
    double tiny = 1e-3;      // tail max below this reads as norm 0
    double disagree = 0.75;  // relative tail spread beyond this: Inconclusive
};

/// Exact norm of a symbolic sequence.  Requires the scale to carry a closed
/// form (unknown L reports Inconclusive); a flagged cancellation that exact
/// pairing cannot resolve throws AmbiguousDominance.
UltraNormValue norm_exact(const SymbolicSeq& f, const Scale& r);

/// Numeric tail estimate of limsup p(f_n)^{r_n}; pf(n) = p(f_n) >= 0.
UltraNormValue norm_estimate(const std::function<double(long)>& pf, const Scale& r,
                             const IndexLadder& ladder, const EstimatorOptions& opts = {});

/// Squeeze rule: when lo_n <= v(n) <= hi_n holds on the ladder and the two
/// exact norms coincide, the sandwiched sequence has that exact norm.
UltraNormValue norm_exact_between(const GrowthClass& lo, const GrowthClass& hi,
                                  const std::function<double(long)>& v, const Scale& r,
                                  const IndexLadder& ladder);

enum class SeqClass { Moderate, Negligible, ModerateNotNegligible, Unbounded, Inconclusive };

std::string seq_class_str(SeqClass c);

/// Classification from the exact norm: zero / finite / infinite.
SeqClass classify(const SymbolicSeq& f, const Scale& r);

/// Evidence-grade classification for black-box sequences: never claims
/// Negligible or Unbounded without decisive tail behaviour.
SeqClass classify_estimate(const std::function<double(long)>& pf, const Scale& r,
                           const IndexLadder& ladder, const EstimatorOptions& opts = {});

UltraNormValue distance(const SymbolicSeq& f, const SymbolicSeq& g, const Scale& r);
UltraNormValue distance_numeric(const std::function<std::complex<double>(long)>& f,
                                const std::function<std::complex<double>(long)>& g,
                                const Scale& r, const IndexLadder& ladder,
                                const Seminorm& p = abs_seminorm());

/// ||f||_{p,s} = ||f||_{p,r}^C for equivalent scales s ~ C*r.
Verdict scale_power_law(const SymbolicSeq& f, const Scale& r, const Scale& s, double C,
                        double rel_tol = 1e-9);

/// Diagonal limit of a Cauchy family on a finite budget (desk-scale
/// completeness).  family(m, n) is the n-th member of the m-th sequence.
struct DiagonalResult {
    std::function<double(long)> diagonal;
    std::vector<int> m_mu;     // m_mu[mu]
    std::vector<long> n_mu;    // n_mu[mu]
    // d(f^m, diagonal) < 2^-mu for m >= m_{mu+1}
    Verdict tail_check = Verdict::inconclusive("not verified");
};

DiagonalResult diagonal_limit(const std::function<double(int, long)>& family, const Scale& r,
                              const IndexLadder& ladder, int mu_max = 9, int m_range = 160);

} // namespace seqgf
