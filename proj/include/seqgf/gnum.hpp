#pragma once

// The ring of r-generalized numbers: moderate sequences modulo negligible
// ones, with quotient equality tests and the Maddox sequence-space
// characterizations of moderation and negligibility.

#include <complex>
#include <functional>
#include <optional>
#include <variant>

#include "seqgf/ultranorm.hpp"

namespace seqgf {

class GenNumber {
public:
    using Callable = std::function<std::complex<double>(long)>;

    /// Moderation is enforced on construction: an unbounded representative
    /// throws NotModerate.  Black-box representatives are screened by the
    /// tail estimator, which only rejects on decisive evidence.
    static GenNumber symbolic(SymbolicSeq rep, Scale scale);
    static GenNumber callable(Callable rep, Scale scale,
                              const IndexLadder& ladder = default_ladder());
    static GenNumber zero(Scale scale) { return symbolic(SymbolicSeq::zero(), std::move(scale)); }
    static GenNumber constant(double c, Scale scale);

    bool is_symbolic() const { return std::holds_alternative<SymbolicSeq>(rep_); }
    const SymbolicSeq& sym() const { return std::get<SymbolicSeq>(rep_); }
    std::complex<double> eval(long n) const;
    const Scale& scale() const { return scale_; }

    UltraNormValue norm(const IndexLadder& ladder = default_ladder()) const;
    SeqClass classification(const IndexLadder& ladder = default_ladder()) const;

private:
    GenNumber(std::variant<SymbolicSeq, Callable> rep, Scale scale)
        : rep_(std::move(rep)), scale_(std::move(scale)) {}

    std::variant<SymbolicSeq, Callable> rep_;
    Scale scale_;
    std::optional<SeqClass> cls_; // populated at construction

};

GenNumber gn_add(const GenNumber& a, const GenNumber& b);
GenNumber gn_mul(const GenNumber& a, const GenNumber& b);
GenNumber gn_neg(const GenNumber& a);
GenNumber gn_sub(const GenNumber& a, const GenNumber& b);

/// e_r = (e^(1/r_n))_n, a positive unit; power -1 gives its inverse.
GenNumber unit_e_r(const Scale& r, double power = 1.0);

/// Inverse of a single-term positive representative (bounded below).
GenNumber gn_invert(const GenNumber& a);

/// Quotient equality: the difference is negligible.  Exact for symbolic
/// representatives; black-box representatives never report Holds, only
/// Fails with a witness or Inconclusive.
Verdict eq_quotient(const GenNumber& a, const GenNumber& b,
                    const IndexLadder& ladder = default_ladder());

struct MaddoxResult {
    Verdict verdict = Verdict::inconclusive("not run");
    std::optional<long> k; // witnessing weight: found exponent base (Holds for
                           // the l-infinity test, first failing k for the c0 test)
};

/// exists k: sup |x_n| k^(-1/r_n) < infinity, decided from the sampled tail
/// (decisive-decay threshold 1e-6 at the ladder end; k capped at k_max).
/// The raw overload takes log |x_n| (use -inf for zeros) so that inputs too
/// large for a moderate GenNumber can still be scanned.
MaddoxResult maddox_linf_test(const std::function<double(long)>& log_abs, const Scale& r,
                              const IndexLadder& ladder = default_ladder(), long k_max = 1000000);
MaddoxResult maddox_linf_test(const GenNumber& x, const IndexLadder& ladder = default_ladder(),
                              long k_max = 1000000);

/// forall k: lim |x_n| k^(1/r_n) = 0, sampled at k = ceil(e^j).
MaddoxResult maddox_c0_test(const std::function<double(long)>& log_abs, const Scale& r,
                            const IndexLadder& ladder = default_ladder(), long k_max = 1000000);
MaddoxResult maddox_c0_test(const GenNumber& x, const IndexLadder& ladder = default_ladder(),
                            long k_max = 1000000);

/// log |f_n| of a symbolic sequence, -inf at exact zeros.
std::function<double(long)> log_abs_of(const SymbolicSeq& f);

} // namespace seqgf
