#pragma once

// Asymptotic algebras: family-based moderation and negligibility with the
// intersection/union logic per family direction, the O/o classification
// against an asymptotic scale, their equivalence through the derived rows
// r^m = 1/|log a_m|, and the second-kind (infra-exponential) algebras.

#include <optional>
#include <vector>

#include "seqgf/scales.hpp"
#include "seqgf/ultranorm.hpp"

namespace seqgf {

struct RowReport {
    int m;
    UltraNormValue norm;
};

struct FamilyClassification {
    bool moderate = false;
    bool negligible = false;
    std::optional<int> moderate_witness;   // case II: first row with a finite norm
    std::optional<int> negligible_witness; // case I: first row with norm 0
    std::vector<RowReport> rows;
    SeqClass overall = SeqClass::Inconclusive;
};

/// Case I: moderate = every row finite, negligible = some row zero.
/// Case II: moderate = some row finite, negligible = every row zero.
/// Rows beyond m_max are covered by the equivalent-scales monotonicity.
FamilyClassification family_classify(const SymbolicSeq& f, const ScaleFamily& fam);

enum class AClass { InAlgebra, InIdeal, Neither };
std::string a_class_str(AClass c);

struct AClassification {
    AClass label = AClass::Neither;
    std::optional<int> witness_m; // largest m with |f| = O(a_m)
};

/// O/o growth classification against the asymptotic scale, decided by exact
/// order comparison; m ranges over [-m_range, m_range].
AClassification classify_A(const SymbolicSeq& f, const AsymptoticScale& a, int m_range = 8);

/// Family classification along r^m = 1/|log a_m| agrees with the O/o one.
Verdict rate_equivalence(const SymbolicSeq& f, const AsymptoticScale& a, int m_max = 3);

enum class AClass2 { InSubalgebra, InIdeal, Neither };
std::string a_class2_str(AClass2 c);

struct A2Classification {
    AClass2 label = AClass2::Neither;
    std::optional<int> witness_row; // row with norm < 1 (ideal witness)
    std::vector<RowReport> rows;
};

/// Second-kind algebras from a_sigma(n) = e^(-n sigma): rows r^m = m/n;
/// subalgebra = all row norms <= 1, ideal = some row norm < 1.
A2Classification classify_A_secondkind(const SymbolicSeq& f, int m_max = 8);

/// Independent route: limsup |f_n|^(1/n), whose thresholds (<= 1, < 1)
/// characterize the second-kind membership.
UltraNormValue infra_exponential_norm(const SymbolicSeq& f);

} // namespace seqgf
