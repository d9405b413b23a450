#pragma once

// The association hierarchy: null-sequence association, s-association,
// strong association through ultrametric balls, and the weak/strong-weak
// variants defined through dual pairings against a test set.

#include <functional>
#include <vector>

#include "seqgf/gnum.hpp"
#include "seqgf/torus.hpp"

namespace seqgf {

struct AssocSpec {
    enum class Flavor { Plain, S, Strong, StrongS, Weak, StrongWeak };

    Flavor flavor = Flavor::Plain;
    double s = 0;
    std::vector<CoeffFamily> testset;

    static AssocSpec plain() { return {Flavor::Plain, 0, {}}; }
    static AssocSpec s_level(double s) { return {Flavor::S, s, {}}; }
    static AssocSpec strong() { return {Flavor::Strong, 0, {}}; }
    static AssocSpec strong_s(double s) { return {Flavor::StrongS, s, {}}; }
    static AssocSpec weak(double s, std::vector<CoeffFamily> d);
    static AssocSpec strong_weak(double s, std::vector<CoeffFamily> d);

    std::string flavor_str() const;
};

/// Decaying analytic test functions plus the low Fourier modes.
std::vector<CoeffFamily> default_testset(int max_mode = 8);

/// Does the representative tend to 0?  Closed form for symbolic
/// representatives; a tail slope fit with Inconclusive fallback otherwise.
Verdict null_test(const GenNumber& x, const IndexLadder& ladder = default_ladder());

/// x - y in N^(s): (x_n - y_n) e^(s/r_n) is a null sequence.
Verdict s_assoc(const GenNumber& x, const GenNumber& y, double s,
                const IndexLadder& ladder = default_ladder());

/// d_(p,r)(F, G) < e^-s for the modulus seminorm.
Verdict strong_assoc(const GenNumber& F, const GenNumber& G, double s = 0,
                     const IndexLadder& ladder = default_ladder());

/// d_(p,r)(F, G) < e^-s for every listed seminorm on torus elements.
Verdict strong_assoc_torus(const TorusGF& F, const TorusGF& G,
                           const std::vector<TorusSeminorm>& seminorms, double s = 0,
                           const IndexLadder& ladder = default_ladder());

/// forall psi in D: <F - G, psi> is s-associated to 0.
Verdict weak_assoc(const TorusGF& F, const TorusGF& G, const AssocSpec& spec,
                   const IndexLadder& ladder = default_ladder());

/// forall psi in D: ||<F - G, psi>||_r < e^-s.
Verdict strong_weak_assoc(const TorusGF& F, const TorusGF& G, const AssocSpec& spec,
                          const IndexLadder& ladder = default_ladder());

/// Rep-level forms used by the implication-chain properties.
Verdict weak_on_rep(const GenNumber& pairing, double s,
                    const IndexLadder& ladder = default_ladder());
Verdict strong_weak_on_rep(const GenNumber& pairing, double s,
                           const IndexLadder& ladder = default_ladder());

struct ChainReport {
    Verdict strong_weak_s = Verdict::inconclusive("not run");
    Verdict weak_s = Verdict::inconclusive("not run");
    Verdict strong_weak_sprime = Verdict::inconclusive("not run");
    bool violated = false;
    std::string detail;
};

/// StrongWeak(s) => Weak(s) => StrongWeak(s') for s' < s, checked on one
/// pairing representative.
ChainReport implication_chain_on_rep(const GenNumber& pairing, double s, double s_prime,
                                     const IndexLadder& ladder = default_ladder());

/// Same chain evaluated through actual pairings of two torus elements.
ChainReport implication_chain(const TorusGF& F, const TorusGF& G, double s, double s_prime,
                              const std::vector<CoeffFamily>& testset,
                              const IndexLadder& ladder = default_ladder());

/// J_M-association: every pairing <F - G, psi> satisfies the predicate M.
using MemberPredicate = std::function<Verdict(const GenNumber&)>;

Verdict j_assoc(const TorusGF& F, const TorusGF& G, const MemberPredicate& M,
                const std::vector<CoeffFamily>& testset,
                const IndexLadder& ladder = default_ladder());

MemberPredicate member_null(const IndexLadder& ladder = default_ladder());
MemberPredicate member_ball(double radius, const IndexLadder& ladder = default_ladder());
MemberPredicate member_all();

/// Additivity of a user-supplied membership predicate cannot be verified in
/// general; this samples it: M(x) and M(y) must imply M(x + y) on the
/// given pairs.
Verdict check_member_additivity(const MemberPredicate& M,
                                const std::vector<std::pair<GenNumber, GenNumber>>& pairs);

} // namespace seqgf
