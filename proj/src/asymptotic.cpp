#include "seqgf/asymptotic.hpp"

#include <cmath>

#include "seqgf/errors.hpp"

namespace seqgf {

FamilyClassification family_classify(const SymbolicSeq& f, const ScaleFamily& fam) {
    FamilyClassification out;
    bool all_finite = true, any_finite = false, all_zero = true, any_zero = false;
    for (int m = fam.m_min; m <= fam.m_max; ++m) {
        UltraNormValue v = norm_exact(f, fam.row(m));
        out.rows.push_back({m, v});
        if (v.is_inconclusive()) {
            out.overall = SeqClass::Inconclusive;
            return out;
        }
        bool finite = std::isfinite(v.value());
        bool zero = v.value() == 0;
        if (finite && !any_finite) {
            any_finite = true;
            if (fam.direction == ScaleFamily::Direction::CaseII) out.moderate_witness = m;
        }
        if (zero && !any_zero) {
            any_zero = true;
            if (fam.direction == ScaleFamily::Direction::CaseI) out.negligible_witness = m;
        }
        all_finite = all_finite && finite;
        all_zero = all_zero && zero;
    }
    if (fam.direction == ScaleFamily::Direction::CaseI) {
        out.moderate = all_finite;   // F = intersection of rows
        out.negligible = any_zero;   // K = union of rows
    } else {
        out.moderate = any_finite;   // F = union of rows
        out.negligible = all_zero;   // K = intersection of rows
    }
    out.overall = !out.moderate  ? SeqClass::Unbounded
                  : out.negligible ? SeqClass::Negligible
                                   : SeqClass::ModerateNotNegligible;
    return out;
}

std::string a_class_str(AClass c) {
    switch (c) {
        case AClass::InAlgebra: return "in-algebra";
        case AClass::InIdeal: return "in-ideal";
        default: return "neither";
    }
}

AClassification classify_A(const SymbolicSeq& f, const AsymptoticScale& a, int m_range) {
    AClassification out;
    if (f.is_zero()) {
        out.label = AClass::InIdeal;
        return out;
    }
    LogGrowth lg = f.dominant_term().log_growth();
    int lo = std::max(a.m_lo, -m_range), hi = std::min(a.m_hi, m_range);
    bool all_small_o = true;
    for (int m = hi; m >= lo; --m) {
        LogGrowth d = lg;
        d.add(a.log_level(m).negated());
        int sign = d.limit_sign(); // |f|/a_m: -1 -> o, 0 -> O, +1 -> neither
        if (sign <= 0 && !out.witness_m) out.witness_m = m;
        if (sign >= 0) all_small_o = false;
    }
    if (all_small_o) out.label = AClass::InIdeal;
    else if (out.witness_m) out.label = AClass::InAlgebra;
    else out.label = AClass::Neither;
    return out;
}

Verdict rate_equivalence(const SymbolicSeq& f, const AsymptoticScale& a, int m_max) {
    ScaleFamily fam;
    fam.direction = ScaleFamily::Direction::CaseII;
    fam.m_min = 1;
    fam.m_max = m_max;
    fam.row = [a](int m) { return scale_from_asymptotic(a, m); };
    fam.name = "rows of " + a.name;

    FamilyClassification fc = family_classify(f, fam);
    // the O/o side quantifies over all integers; the sampled window must
    // cover the corpus growth, not just the derived rows
    AClassification ac = classify_A(f, a, std::max(m_max, 8));
    if (fc.overall == SeqClass::Inconclusive)
        return Verdict::inconclusive("family classification undecided");
    bool algebra_agree = fc.moderate == (ac.label != AClass::Neither);
    bool ideal_agree = fc.negligible == (ac.label == AClass::InIdeal);
    if (algebra_agree && ideal_agree)
        return Verdict::holds("family and O/o classifications agree");
    return Verdict::fails({0, 0,
                           "family says " + seq_class_str(fc.overall) + ", O/o says " +
                               a_class_str(ac.label)});
}

std::string a_class2_str(AClass2 c) {
    switch (c) {
        case AClass2::InSubalgebra: return "in-subalgebra";
        case AClass2::InIdeal: return "in-ideal";
        default: return "neither";
    }
}

A2Classification classify_A_secondkind(const SymbolicSeq& f, int m_max) {
    A2Classification out;
    if (f.is_zero()) {
        out.label = AClass2::InIdeal;
        return out;
    }
    bool all_le_1 = true;
    for (int m = 1; m <= m_max; ++m) {
        // r^m = 1/|log a_(1/m)| = m/n for the infra-exponential rate
        Scale row = Scale::from_inv_form(Form::monomial(1.0 / m, Mono{1, 0, 0}), 2,
                                         Scale::Kind::FromAsymptotic,
                                         "n/" + std::to_string(m));
        UltraNormValue v = norm_exact(f, row);
        out.rows.push_back({m, v});
        if (v.is_inconclusive()) return out;
        if (!(v.value() <= 1.0 + 1e-12)) all_le_1 = false;
        if (v.value() < 1.0 - 1e-12 && !out.witness_row) out.witness_row = m;
    }
    if (all_le_1 && out.witness_row) out.label = AClass2::InIdeal;
    else if (all_le_1) out.label = AClass2::InSubalgebra;
    else out.label = AClass2::Neither;
    return out;
}

UltraNormValue infra_exponential_norm(const SymbolicSeq& f) {
    return norm_exact(f, make_power_scale(1));
}

} // namespace seqgf
