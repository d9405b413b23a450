#pragma once

// Weight scales r = (r_n): positive sequences decreasing to zero, carried
// together with the closed form of 1/r_n so that limits involving the scale
// can be evaluated exactly.  Includes families of scales (rows indexed by m)
// and asymptotic scales a_m with a_{m+1} = o(a_m), a_{-m} = 1/a_m.

#include <functional>
#include <optional>
#include <string>

#include "seqgf/common.hpp"
#include "seqgf/forms.hpp"

namespace seqgf {

class Scale {
public:
    enum class Kind { Log, Power, EgorovRow, FromAsymptotic, Custom };

    Kind kind() const { return kind_; }
    double param() const { return param_; }
    long domain_start() const { return domain_start_; }
    const std::string& name() const { return name_; }

    /// Closed form of 1/r_n, when known.  Absent for Egorov rows and for
    /// opaque custom scales; downstream symbolic norms then report
    /// Inconclusive instead of guessing.
    const std::optional<Form>& inv_form() const { return inv_form_; }

    bool is_egorov() const { return kind_ == Kind::EgorovRow; }

    /// r_n.  Egorov rows take values in {0,1}; every other kind is positive.
    double eval(double n) const;

    /// L = lim r_n * log n, when known in closed form (may be +inf).
    std::optional<double> big_l() const;

    /// Indices where loglog-terms make sense start at 3; the sampling floor
    /// is the max of that and domain_start when requested.
    IndexLadder clamp(const IndexLadder& ladder, bool needs_loglog = false) const;

    static Scale log_scale();
    static Scale power_scale(double m);
    static Scale egorov_row(int m);
    static Scale scaled(double c, const Scale& base);
    static Scale log_power(double q);
    static Scale custom(std::function<double(double)> eval, long domain_start, std::string name);
    static Scale from_inv_form(Form inv, long domain_start, Kind kind, std::string name);

    bool same_as(const Scale& o) const;

private:
    Kind kind_ = Kind::Custom;
    double param_ = 0;
    long domain_start_ = 2;
    std::optional<Form> inv_form_;
    std::function<double(double)> opaque_;
    std::string name_;
};

inline Scale make_log_scale() { return Scale::log_scale(); }
inline Scale make_power_scale(double m) { return Scale::power_scale(m); }

struct ScaleFamily {
    enum class Direction { CaseI, CaseII };

    Direction direction = Direction::CaseII;
    int m_min = 1;
    int m_max = 8;
    std::function<Scale(int)> row;
    std::string name;
};

/// Egorov rows r^m = (1,...,1,0,0,...): moderation is vacuous and the ideal
/// consists of the eventually-zero sequences.
ScaleFamily make_egorov_family(int m_max = 8);

/// Colombeau rows r^m = (1/m)(1/log n), case (II).
ScaleFamily make_colombeau_family(int m_max = 8);

/// Gevrey-type rows r^m = n^(-1/m), case (I).
ScaleFamily make_power_row_family(int m_max = 8);

/// Asymptotic scale a = (a_m)_{m in Z}: stored through log a_m so that both
/// polynomial (n^-m) and iterated-exponential rates fit one representation.
struct AsymptoticScale {
    std::string name;
    int m_lo = -8;
    int m_hi = 8;
    std::function<LogGrowth(int)> log_level;          // log a_m
    std::function<int(int)> m_witness;                // M with a_M = o(a_m^2)

    double eval(int m, double n) const { return std::exp(log_level(m).eval(n)); }
};

AsymptoticScale make_polynomial_asymptotic();          // a_m(n) = n^-m
AsymptoticScale make_iterexp_asymptotic(int depth_cap = 3); // a_m = 1/exp^m(n)

/// Real-indexed rate a_sigma(n) = e^(-n*sigma) (infra-exponential setting).
struct RealAsymptoticScale {
    std::string name;
    std::function<LogGrowth(double)> log_level;       // log a_sigma
};

RealAsymptoticScale make_infraexp_asymptotic();

/// Validate the asymptotic-scale axioms on a sampling ladder:
/// a_{m+1} = o(a_m), a_{-m}*a_m = 1, a_{M(m)} = o(a_m^2).
Verdict check_asymptotic_axioms(const AsymptoticScale& a, const IndexLadder& ladder);

/// r_n = 1/|log a_m(n)|.  Rejects rates with a_m(n) = 1 on the ladder.
Scale scale_from_asymptotic(const AsymptoticScale& a, int m);
Scale scale_from_asymptotic(const RealAsymptoticScale& a, double sigma);

/// s = O(r)?  Closed-form confirmation when both scales carry forms;
/// sampled-only evidence otherwise is reported as Inconclusive.
Verdict is_big_O(const Scale& s, const Scale& r, const IndexLadder& ladder);

/// C with s_n/r_n -> C in (0, inf), when the forms decide it.
std::optional<double> equivalent_scale_ratio(const Scale& s, const Scale& r);

/// Monotone non-increasing and tending to zero along the ladder.
Verdict check_scale_shape(const Scale& s, const IndexLadder& ladder);

} // namespace seqgf
