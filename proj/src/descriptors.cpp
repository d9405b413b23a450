#include "seqgf/descriptors.hpp"

#include <cmath>

#include "seqgf/errors.hpp"

namespace seqgf {

Scale scale_from_json(const Json& j) {
    std::string kind = j.value("kind", "");
    if (kind == "log") return make_log_scale();
    if (kind == "power") {
        if (!j.contains("m")) throw InvalidParameter("power scale descriptor needs \"m\"");
        return make_power_scale(j["m"].get<double>());
    }
    if (kind == "egorov") {
        if (!j.contains("m")) throw InvalidParameter("egorov descriptor needs \"m\"");
        return Scale::egorov_row(j["m"].get<int>());
    }
    if (kind == "asymptotic") {
        if (j.contains("sigma"))
            return scale_from_asymptotic(make_infraexp_asymptotic(), j["sigma"].get<double>());
        if (j.contains("m"))
            return scale_from_asymptotic(make_polynomial_asymptotic(), j["m"].get<int>());
        throw InvalidParameter("asymptotic descriptor needs \"m\" or \"sigma\"");
    }
    throw InvalidParameter("unknown scale kind \"" + kind + "\"");
}

Json scale_to_json(const Scale& s) {
    Json j;
    switch (s.kind()) {
        case Scale::Kind::Log: j["kind"] = "log"; break;
        case Scale::Kind::Power:
            j["kind"] = "power";
            j["m"] = s.param();
            break;
        case Scale::Kind::EgorovRow:
            j["kind"] = "egorov";
            j["m"] = int(s.param());
            break;
        case Scale::Kind::FromAsymptotic: j["kind"] = "asymptotic"; break;
        default: j["kind"] = "custom"; break;
    }
    j["name"] = s.name();
    j["domain_start"] = s.domain_start();
    if (auto L = s.big_l()) j["L"] = std::isinf(*L) ? Json("inf") : Json(*L);
    else j["L"] = "unknown";
    return j;
}

GrowthClass growth_from_json(const Json& j) {
    Scale scale = j.contains("scale") ? scale_from_json(j["scale"]) : make_log_scale();
    Phase phase = Phase::Positive;
    if (j.value("phase", "pos") == "alt") phase = Phase::Alternating;
    int sign = j.value("sign", 1);
    return GrowthClass(j.value("c0", 0.0), j.value("s", 0.0), j.value("gamma", 0.0),
                       j.value("delta", 0.0), scale, phase, sign);
}

Json growth_to_json(const GrowthClass& g) {
    Json j;
    j["c0"] = g.c0();
    j["s"] = g.s();
    j["gamma"] = g.gamma();
    j["delta"] = g.delta();
    j["phase"] = g.phase() == Phase::Alternating ? "alt" : "pos";
    j["sign"] = g.sign();
    j["scale"] = scale_to_json(g.scale_ref());
    return j;
}

SymbolicSeq seq_from_json(const Json& j) {
    if (j.contains("terms")) {
        std::vector<GrowthClass> terms;
        for (const auto& t : j["terms"]) terms.push_back(growth_from_json(t));
        return SymbolicSeq::from_terms(std::move(terms));
    }
    return SymbolicSeq(growth_from_json(j));
}

GenNumber gennumber_from_json(const Json& j) {
    if (!j.contains("rep") || !j.contains("scale"))
        throw InvalidParameter("generalized-number descriptor needs \"rep\" and \"scale\"");
    return GenNumber::symbolic(seq_from_json(j["rep"]), scale_from_json(j["scale"]));
}

CoeffFamily coeff_from_json(const Json& j) {
    std::string form = j.value("form", "");
    if (form == "geometric") return CoeffFamily::geometric(j.value("rho", 0.5));
    if (form == "constant") return CoeffFamily::constant();
    if (form == "powerlaw") return CoeffFamily::power_law(j.value("alpha", 0.0));
    if (form == "subexp") return CoeffFamily::sub_exp(j.value("beta", 1.0));
    if (form == "finite") {
        std::map<long, std::complex<double>> s;
        for (const auto& row : j.value("support", Json::array()))
            s[row.at(0).get<long>()] = {row.at(1).get<double>(),
                                        row.size() > 2 ? row.at(2).get<double>() : 0.0};
        return CoeffFamily::finite(std::move(s));
    }
    throw InvalidParameter("unknown coefficient form \"" + form + "\"");
}

Json coeff_to_json(const CoeffFamily& c) {
    Json j;
    switch (c.tag()) {
        case CoeffFamily::Tag::Geometric:
            j["form"] = "geometric";
            j["rho"] = c.param();
            break;
        case CoeffFamily::Tag::Constant: j["form"] = "constant"; break;
        case CoeffFamily::Tag::PowerLaw:
            j["form"] = "powerlaw";
            j["alpha"] = c.param();
            break;
        case CoeffFamily::Tag::SubExp:
            j["form"] = "subexp";
            j["beta"] = c.param();
            break;
        case CoeffFamily::Tag::Finite: {
            j["form"] = "finite";
            Json rows = Json::array();
            for (const auto& [k, v] : c.support()) rows.push_back({k, v.real(), v.imag()});
            j["support"] = rows;
            break;
        }
    }
    return j;
}

GaugeFn gauge_from_json(const Json& j) {
    std::string tag = j.value("tag", "");
    if (tag == "identity") return GaugeFn::identity();
    if (tag == "power") return GaugeFn::power(j.value("k", 1.0));
    if (tag == "exp") return GaugeFn::exponential();
    if (tag == "log1p") return GaugeFn::log1p_gauge();
    if (tag == "affine") return GaugeFn::affine(j.value("a", 1.0), j.value("b", 0.0));
    if (tag == "sum") return GaugeFn::sum(gauge_from_json(j.at("lhs")), gauge_from_json(j.at("rhs")));
    if (tag == "product")
        return GaugeFn::product(gauge_from_json(j.at("lhs")), gauge_from_json(j.at("rhs")));
    throw InvalidParameter("unknown gauge tag \"" + tag + "\"");
}

Json norm_to_json(const UltraNormValue& v) {
    Json j;
    j["mode"] = v.mode_str();
    if (v.is_inconclusive()) {
        j["note"] = v.note();
        return j;
    }
    j["value"] = std::isinf(v.value()) ? Json("inf") : Json(v.value());
    if (v.is_estimated()) {
        j["ci_low"] = v.ci_low();
        j["ci_high"] = std::isinf(v.ci_high()) ? Json("inf") : Json(v.ci_high());
    }
    return j;
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["result"] = v.str();
    if (!v.evidence().empty()) j["evidence"] = v.evidence();
    if (v.witness()) {
        j["witness"] = Json{{"index", v.witness()->index},
                            {"value", v.witness()->value},
                            {"note", v.witness()->note}};
    }
    return j;
}

} // namespace seqgf
