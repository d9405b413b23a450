// Command-line front end: norms, classification, association, embedding
// demos and scale conversion, with JSON reports and CSV traces.
//
// Exit codes: 0 holds/value computed, 1 fails, 2 usage or malformed input,
// 3 inconclusive.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "seqgf/association.hpp"
#include "seqgf/asymptotic.hpp"
#include "seqgf/descriptors.hpp"
#include "seqgf/errors.hpp"
#include "seqgf/functorial.hpp"
#include "seqgf/gnum.hpp"
#include "seqgf/torus.hpp"
#include "seqgf/ultranorm.hpp"

using namespace seqgf;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct Options {
    int ladder_max_exp = 20;
    double tol = 1e-9;
    std::string format = "json";
};

IndexLadder ladder_of(const Options& o) { return IndexLadder::geometric(o.ladder_max_exp); }

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

std::string fmt_num(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_csv(const std::string& path, const std::vector<TraceRow>& rows) {
    std::ofstream out(path);
    out << "n,p_value,powered_value\n";
    for (const auto& r : rows)
        out << r.n << "," << fmt_num(r.p_value) << "," << fmt_num(r.powered_value) << "\n";
}

void emit(const Options& o, const Json& report) {
    if (o.format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::cout << report["command"].get<std::string>() << "\n";
    for (const auto& r : report["results"]) {
        std::cout << "  " << r["name"].get<std::string>() << ": ";
        if (r.contains("verdict")) std::cout << r["verdict"]["result"].get<std::string>();
        else if (r.contains("norm")) std::cout << r["norm"].dump();
        else if (r.contains("value")) std::cout << r["value"].dump();
        std::cout << "\n";
    }
    if (report.contains("traces"))
        for (const auto& t : report["traces"]) std::cout << "  trace: " << t.get<std::string>() << "\n";
}

Json base_report(const std::string& command) {
    Json j;
    j["schema_version"] = 1;
    j["command"] = command;
    j["inputs"] = Json::object();
    j["results"] = Json::array();
    return j;
}

int verdict_exit(const Verdict& v) {
    if (v.is_holds()) return kExitHolds;
    if (v.is_fails()) return kExitFails;
    return kExitInconclusive;
}

// ---- norm ---------------------------------------------------------------

int cmd_norm(const Options& o, const std::string& seq_path, const std::string& scale_path,
             const std::string& csv_path) {
    Json report = base_report("norm");
    Json seq_j = load_json(seq_path);
    Json scale_j = load_json(scale_path);
    report["inputs"]["seq"] = seq_j;
    report["inputs"]["scale"] = scale_j;

    SymbolicSeq f = seq_from_json(seq_j);
    Scale r = scale_from_json(scale_j);
    UltraNormValue exact = norm_exact(f, r);
    auto pf = [&f](long n) { return std::fabs(f.eval(double(n))); };
    IndexLadder lad = r.clamp(ladder_of(o), f.needs_loglog());
    UltraNormValue est = norm_estimate(pf, r, lad);

    report["results"].push_back({{"name", "norm_exact"}, {"norm", norm_to_json(exact)}});
    report["results"].push_back({{"name", "norm_estimate"}, {"norm", norm_to_json(est)}});

    if (!csv_path.empty()) {
        std::vector<TraceRow> rows;
        for (long n : lad.points) {
            double p = pf(n);
            double rn = r.eval(double(n));
            double powered = p == 0 ? 0 : std::exp(rn * std::log(p));
            rows.push_back({n, p, powered});
        }
        write_csv(csv_path, rows);
        report["traces"] = Json::array({csv_path});
    }
    emit(o, report);
    return exact.is_inconclusive() && est.is_inconclusive() ? kExitInconclusive : kExitHolds;
}

// ---- classify -----------------------------------------------------------

int cmd_classify(const Options& o, const std::string& seq_path, const std::string& scale_path) {
    Json report = base_report("classify");
    Json seq_j = load_json(seq_path);
    Json scale_j = load_json(scale_path);
    report["inputs"]["seq"] = seq_j;
    report["inputs"]["scale"] = scale_j;

    SymbolicSeq f = seq_from_json(seq_j);
    Scale r = scale_from_json(scale_j);
    SeqClass c = classify(f, r);
    UltraNormValue v = norm_exact(f, r);
    GenNumber x = GenNumber::symbolic(f, r);
    MaddoxResult linf = maddox_linf_test(x, ladder_of(o));
    MaddoxResult c0 = maddox_c0_test(x, ladder_of(o));

    report["results"].push_back({{"name", "classification"}, {"value", seq_class_str(c)}});
    report["results"].push_back({{"name", "norm_exact"}, {"norm", norm_to_json(v)}});
    Json linf_j = verdict_to_json(linf.verdict);
    if (linf.k) linf_j["k"] = *linf.k;
    report["results"].push_back({{"name", "maddox_linf"}, {"verdict", linf_j}});
    Json c0_j = verdict_to_json(c0.verdict);
    if (c0.k) c0_j["k"] = *c0.k;
    report["results"].push_back({{"name", "maddox_c0"}, {"verdict", c0_j}});
    emit(o, report);
    return c == SeqClass::Inconclusive ? kExitInconclusive : kExitHolds;
}

// ---- assoc --------------------------------------------------------------

int cmd_assoc(const Options& o, const std::string& flavor, double s,
              const std::string& a_path, const std::string& b_path,
              const std::string& testset_path) {
    Json report = base_report("assoc");
    report["inputs"]["flavor"] = flavor;
    report["inputs"]["s"] = s;
    IndexLadder lad = ladder_of(o);

    Verdict v = Verdict::inconclusive("not evaluated");
    if (!testset_path.empty() && (flavor == "weak" || flavor == "strong-weak")) {
        // test-set-quantified flavors compare the embedded comb with the
        // zero element: every pairing must pass
        std::vector<CoeffFamily> d;
        if (testset_path == "default") d = default_testset();
        else
            for (const auto& cj : load_json(testset_path)) d.push_back(coeff_from_json(cj));
        report["inputs"]["testset"] = testset_path;
        Scale r = make_log_scale();
        TorusGF delta = embed(CoeffFamily::constant(), r);
        TorusGF zero = embed(CoeffFamily::zero(), r);
        AssocSpec spec = flavor == "weak" ? AssocSpec::weak(s, d) : AssocSpec::strong_weak(s, d);
        v = flavor == "weak" ? weak_assoc(delta, zero, spec, lad)
                             : strong_weak_assoc(delta, zero, spec, lad);
    } else if (a_path.empty()) {
        // built-in demo: the embedded Dirac comb paired against
        // psi-hat = 2^-|k| versus the point-evaluation value psi(0) = 3
        Scale r = make_log_scale();
        TorusGF delta = embed(CoeffFamily::constant(), r);
        GenNumber pairing = pair_gf(delta, CoeffFamily::geometric(0.5), lad);
        GenNumber target = GenNumber::constant(3.0, r);
        report["inputs"]["demo"] = "delta-pairing";
        if (flavor == "weak" || flavor == "s") v = s_assoc(pairing, target, s, lad);
        else if (flavor == "plain") v = null_test(gn_sub(pairing, target), lad);
        else if (flavor == "strong" || flavor == "strong-weak")
            v = strong_assoc(pairing, target, s, lad);
        else {
            std::cerr << "unknown flavor: " << flavor << "\n";
            return kExitUsage;
        }
    } else {
        GenNumber a = gennumber_from_json(load_json(a_path));
        GenNumber b = gennumber_from_json(load_json(b_path));
        report["inputs"]["a"] = load_json(a_path);
        report["inputs"]["b"] = load_json(b_path);
        if (flavor == "plain") v = null_test(gn_sub(a, b), lad);
        else if (flavor == "s") v = s_assoc(a, b, s, lad);
        else if (flavor == "strong") v = strong_assoc(a, b, s, lad);
        else {
            std::cerr << "flavor " << flavor << " needs torus inputs; use the demo\n";
            return kExitUsage;
        }
    }
    Json vr = verdict_to_json(v);
    report["results"].push_back({{"name", "association"}, {"verdict", vr}});
    report["witnesses"] = vr.contains("witness") ? Json::array({vr["witness"]}) : Json::array();
    emit(o, report);
    return verdict_exit(v);
}

// ---- embed --------------------------------------------------------------

int cmd_embed(const Options& o, const std::string& coeff_path, const std::string& scale_path,
              const std::string& csv_path) {
    Json report = base_report("embed");
    Json cj = load_json(coeff_path);
    Json sj = load_json(scale_path);
    report["inputs"]["coeff"] = cj;
    report["inputs"]["scale"] = sj;

    CoeffFamily c = coeff_from_json(cj);
    Scale r = scale_from_json(sj);
    TorusGF f = embed(c, r);
    IndexLadder lad = r.clamp(ladder_of(o));

    if (!c.is_finite()) {
        CoeffClassification cc = classify_coefficients(c);
        report["results"].push_back({{"name", "coefficient_class"}, {"value", coeff_class_str(cc.label)}});
        report["results"].push_back(
            {{"name", "pm_norm_reciprocal"}, {"value", fmt_num(cc.analytic_norm)}});
        report["results"].push_back({{"name", "pm_norm_log"}, {"value", fmt_num(cc.log_norm)}});
    }
    UltraNormValue sup_est = gf_norm_estimate(f, supnorm_seminorm(), lad);
    report["results"].push_back({{"name", "supnorm_moderation"}, {"norm", norm_to_json(sup_est)}});

    std::vector<TraceRow> rows;
    for (long n : lad.points) {
        double p = sup_circle(f.at(n));
        double rn = r.eval(double(n));
        rows.push_back({n, p, p == 0 ? 0 : std::exp(rn * std::log(p))});
    }
    if (!csv_path.empty()) {
        write_csv(csv_path, rows);
        report["traces"] = Json::array({csv_path});
    }
    emit(o, report);
    return kExitHolds;
}

// ---- demo-delta2 ----------------------------------------------------------

GrowthClass growth_of_inv_form(const Scale& r, double mult, double power) {
    const Form& f = *r.inv_form();
    if (f.level() != 0 || f.mono().loglog_exp != 0)
        throw Unsupported("demo needs a polynomial-log scale");
    double c0 = power * std::log(f.coeff()) + std::log(mult);
    return GrowthClass(c0, 0, power * f.mono().n_exp, power * f.mono().log_exp, r);
}

int cmd_demo_delta2(const Options& o, const std::string& scale_path, const std::string& csv_dir) {
    Json report = base_report("demo-delta2");
    Json sj = scale_path.empty() ? Json{{"kind", "log"}} : load_json(scale_path);
    report["inputs"]["scale"] = sj;
    Scale r = scale_from_json(sj);
    IndexLadder lad = r.clamp(ladder_of(o), true);

    TorusGF delta = embed(CoeffFamily::constant(), r);
    TorusGF delta2 = gf_mul(delta, delta);

    // coefficient peaks: the squared comb has the triangular profile with
    // peak 2K+1 at frequency 0
    Json peaks = Json::array();
    for (long n : {1L << 10, 1L << 15, 1L << 20}) {
        long K = embed_cutoff(r, n);
        peaks.push_back({{"n", n},
                         {"cutoff", K},
                         {"delta_sup", 2 * K + 1},
                         {"delta2_peak", delta2.at(n).coeff(0).real()}});
    }
    report["results"].push_back({{"name", "peaks"}, {"value", peaks}});

    // moderation: sup norms are pinched between 1/r_n and 3/r_n, so both
    // norms are exactly 1
    auto sup_delta = [&](long n) { return sup_circle(delta.at(n)); };
    auto sup_delta2 = [&](long n) { return sup_circle(delta2.at(n)); };
    UltraNormValue n1 = norm_exact_between(growth_of_inv_form(r, 1.0, 1.0),
                                           growth_of_inv_form(r, 3.0, 1.0), sup_delta, r, lad);
    UltraNormValue n2 = norm_exact_between(growth_of_inv_form(r, 1.0, 2.0),
                                           growth_of_inv_form(r, 9.0, 2.0), sup_delta2, r, lad);
    report["results"].push_back({{"name", "delta_supnorm"}, {"norm", norm_to_json(n1)}});
    report["results"].push_back({{"name", "delta2_supnorm"}, {"norm", norm_to_json(n2)}});

    // unboundedness of the comb net: sup norms 2K_n + 1 diverge
    std::vector<TraceRow> trace = delta_unboundedness_trace(r, lad);
    bool monotone = true;
    for (std::size_t i = 1; i < trace.size(); ++i)
        if (trace[i].p_value < trace[i - 1].p_value) monotone = false;
    report["results"].push_back({{"name", "delta_net_unbounded"},
                                 {"value", monotone && trace.back().p_value > trace.front().p_value}});

    std::string dir = csv_dir.empty() ? "." : csv_dir;
    std::string delta_csv = dir + "/delta_sup_trace.csv";
    std::string delta2_csv = dir + "/delta2_sup_trace.csv";
    write_csv(delta_csv, trace);
    std::vector<TraceRow> rows2;
    for (long n : lad.points) {
        double p = sup_delta2(n);
        double rn = r.eval(double(n));
        rows2.push_back({n, p, p == 0 ? 0 : std::exp(rn * std::log(p))});
    }
    write_csv(delta2_csv, rows2);
    report["traces"] = Json::array({delta_csv, delta2_csv});

    emit(o, report);
    bool ok = n1.is_exact() && n2.is_exact() && std::fabs(n1.value() - 1.0) < o.tol &&
              std::fabs(n2.value() - 1.0) < o.tol;
    return ok ? kExitHolds : kExitInconclusive;
}

// ---- temperate-check ------------------------------------------------------

int cmd_temperate(const Options& o, const std::string& spec_path) {
    Json report = base_report("temperate-check");
    Json sj = load_json(spec_path);
    report["inputs"]["spec"] = sj;

    std::string phi = sj.value("phi", "square");
    TemperateMapSpec spec;
    if (phi == "square") spec = square_map_spec();
    else if (phi.rfind("linear:", 0) == 0) spec = linear_map_spec(std::stod(phi.substr(7)));
    else if (phi == "exp") spec = exp_map_spec();
    else {
        std::cerr << "unknown phi: " << phi << "\n";
        return kExitUsage;
    }
    if (sj.contains("g")) spec.g = gauge_from_json(sj["g"]);
    if (sj.contains("g2")) spec.g2 = gauge_from_json(sj["g2"]);
    if (sj.contains("h")) spec.h = gauge_from_json(sj["h"]);

    ScaleFamily fam = make_colombeau_family();
    TemperateReport rep = check_temperate(spec, fam, default_probe_grid(make_log_scale()),
                                          default_negligible_probes());
    report["results"].push_back({{"name", "bound_a"}, {"verdict", verdict_to_json(rep.bound_a)}});
    report["results"].push_back({{"name", "bound_b"}, {"verdict", verdict_to_json(rep.bound_b)}});
    report["results"].push_back({{"name", "g_moderate"}, {"verdict", verdict_to_json(rep.g_moderate)}});
    report["results"].push_back(
        {{"name", "g2_moderate"}, {"verdict", verdict_to_json(rep.g2_moderate)}});
    report["results"].push_back(
        {{"name", "h_compatible"}, {"verdict", verdict_to_json(rep.h_compatible)}});
    report["results"].push_back({{"name", "temperate"}, {"verdict", verdict_to_json(rep.overall)}});
    emit(o, report);
    return verdict_exit(rep.overall);
}

// ---- aclassify ------------------------------------------------------------

int cmd_aclassify(const Options& o, const std::string& seq_path, const std::string& scale_kind) {
    Json report = base_report("aclassify");
    Json sj = load_json(seq_path);
    report["inputs"]["seq"] = sj;
    report["inputs"]["scale_kind"] = scale_kind;
    SymbolicSeq f = seq_from_json(sj);

    if (scale_kind == "infra-exp") {
        A2Classification c = classify_A_secondkind(f);
        report["results"].push_back({{"name", "second_kind"}, {"value", a_class2_str(c.label)}});
        if (c.witness_row)
            report["results"].push_back({{"name", "ideal_witness_row"}, {"value", *c.witness_row}});
        UltraNormValue inf_norm = infra_exponential_norm(f);
        report["results"].push_back({{"name", "infra_exponential_norm"},
                                     {"norm", norm_to_json(inf_norm)}});
        emit(o, report);
        return kExitHolds;
    }
    AsymptoticScale a = scale_kind == "exp-iter" ? make_iterexp_asymptotic()
                                                 : make_polynomial_asymptotic();
    AClassification c = classify_A(f, a);
    report["results"].push_back({{"name", "classification"}, {"value", a_class_str(c.label)}});
    if (c.witness_m) report["results"].push_back({{"name", "witness_m"}, {"value", *c.witness_m}});
    Verdict eq = rate_equivalence(f, a);
    report["results"].push_back({{"name", "family_equivalence"}, {"verdict", verdict_to_json(eq)}});
    emit(o, report);
    return verdict_exit(eq);
}

// ---- convert-scale --------------------------------------------------------

int cmd_convert_scale(const Options& o, const std::string& asy_path, int m, double sigma,
                      bool has_sigma) {
    Json report = base_report("convert-scale");
    Json aj = load_json(asy_path);
    report["inputs"]["asymptotic"] = aj;
    std::string kind = aj.value("kind", "polynomial");

    Scale out = [&] {
        if (has_sigma || kind == "infra-exp")
            return scale_from_asymptotic(make_infraexp_asymptotic(), has_sigma ? sigma : aj.value("sigma", 1.0));
        if (kind == "exp-iter") return scale_from_asymptotic(make_iterexp_asymptotic(), m);
        return scale_from_asymptotic(make_polynomial_asymptotic(), m);
    }();

    report["results"].push_back({{"name", "scale"}, {"value", scale_to_json(out)}});
    Json samples = Json::array();
    for (long n : {16L, 1024L, 1L << 20})
        samples.push_back({{"n", n}, {"r_n", fmt_num(out.eval(double(n)))}});
    report["results"].push_back({{"name", "samples"}, {"value", samples}});
    emit(o, report);
    return kExitHolds;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sequence-space generalized functions toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    Options opt;
    app.add_option("--ladder-max-exp", opt.ladder_max_exp, "ladder runs over 2^1..2^max")
        ->capture_default_str();
    app.add_option("--tol", opt.tol, "comparison tolerance")->capture_default_str();
    app.add_option("--format", opt.format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::string seq_path, scale_path, csv_path, a_path, b_path, spec_path, asy_path;
    std::string flavor = "plain", scale_kind = "polynomial", csv_dir, testset_path;
    double s_level = 0, sigma = 0;
    int m_level = 1;

    auto* norm = app.add_subcommand("norm", "exact and estimated ultranorm");
    norm->add_option("seq", seq_path, "sequence JSON")->required();
    norm->add_option("scale", scale_path, "scale JSON")->required();
    norm->add_option("--csv", csv_path, "write the powered-value trace");

    auto* classify_cmd = app.add_subcommand("classify", "moderate/negligible classification");
    classify_cmd->add_option("seq", seq_path, "sequence JSON")->required();
    classify_cmd->add_option("scale", scale_path, "scale JSON")->required();

    auto* assoc = app.add_subcommand("assoc", "association tests");
    assoc->add_option("a", a_path, "first generalized number JSON");
    assoc->add_option("b", b_path, "second generalized number JSON");
    assoc->add_option("--flavor", flavor, "plain|s|strong|weak|strong-weak")
        ->capture_default_str();
    assoc->add_option("--s", s_level, "association level s")->capture_default_str();
    assoc->add_option("--testset", testset_path,
                      "coefficient-descriptor array JSON, or \"default\"");

    auto* embed_cmd = app.add_subcommand("embed", "Fourier-cutoff embedding");
    embed_cmd->add_option("coeff", seq_path, "coefficient JSON")->required();
    embed_cmd->add_option("scale", scale_path, "scale JSON")->required();
    embed_cmd->add_option("--csv", csv_path, "write the sup-norm trace");

    auto* demo = app.add_subcommand("demo-delta2", "Dirac comb and its square");
    demo->add_option("scale", scale_path, "scale JSON (default: log)");
    demo->add_option("--csv-dir", csv_dir, "directory for trace files");

    auto* temperate = app.add_subcommand("temperate-check", "map temperateness");
    temperate->add_option("spec", spec_path, "map spec JSON")->required();

    auto* aclassify = app.add_subcommand("aclassify", "asymptotic-algebra classification");
    aclassify->add_option("seq", seq_path, "sequence JSON")->required();
    aclassify->add_option("--scale-kind", scale_kind, "polynomial|exp-iter|infra-exp")
        ->check(CLI::IsMember({"polynomial", "exp-iter", "infra-exp"}))
        ->capture_default_str();

    auto* convert = app.add_subcommand("convert-scale", "scale from an asymptotic rate");
    convert->add_option("asymptotic", asy_path, "asymptotic JSON")->required();
    auto* m_opt = convert->add_option("--m", m_level, "integer level");
    auto* sig_opt = convert->add_option("--sigma", sigma, "real level");
    (void)m_opt;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (norm->parsed()) return cmd_norm(opt, seq_path, scale_path, csv_path);
        if (classify_cmd->parsed()) return cmd_classify(opt, seq_path, scale_path);
        if (assoc->parsed()) return cmd_assoc(opt, flavor, s_level, a_path, b_path, testset_path);
        if (embed_cmd->parsed()) return cmd_embed(opt, seq_path, scale_path, csv_path);
        if (demo->parsed()) return cmd_demo_delta2(opt, scale_path, csv_dir);
        if (temperate->parsed()) return cmd_temperate(opt, spec_path);
        if (aclassify->parsed()) return cmd_aclassify(opt, seq_path, scale_kind);
        if (convert->parsed())
            return cmd_convert_scale(opt, asy_path, m_level, sigma, sig_opt->count() > 0);
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidParameter& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
