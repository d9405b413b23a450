// Python bindings for the main operations: scales, symbolic sequences,
// ultranorms, generalized numbers, torus embeddings and the association
// tests.  Closed-form results come back as plain floats/strings so that the
// module is usable without any wrapper types on the Python side.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seqgf/association.hpp"
#include "seqgf/asymptotic.hpp"
#include "seqgf/functorial.hpp"
#include "seqgf/gnum.hpp"
#include "seqgf/torus.hpp"
#include "seqgf/ultranorm.hpp"

namespace py = pybind11;
using namespace seqgf;

namespace {

py::dict norm_dict(const UltraNormValue& v) {
    py::dict d;
    d["mode"] = v.mode_str();
    if (!v.is_inconclusive()) {
        d["value"] = v.value();
        d["ci_low"] = v.ci_low();
        d["ci_high"] = v.ci_high();
    } else {
        d["note"] = v.note();
    }
    return d;
}

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["result"] = v.str();
    d["evidence"] = v.evidence();
    if (v.witness()) {
        d["witness_index"] = v.witness()->index;
        d["witness_value"] = v.witness()->value;
        d["witness_note"] = v.witness()->note;
    }
    return d;
}

} // namespace

PYBIND11_MODULE(_seqgf, m) {
    m.doc() = "sequence-space generalized functions: ultranorms, generalized "
              "numbers and periodic hyperfunctions";

    py::register_exception<Error>(m, "SeqgfError");

    py::class_<Scale>(m, "Scale")
        .def_property_readonly("name", &Scale::name)
        .def_property_readonly("domain_start", &Scale::domain_start)
        .def("eval", &Scale::eval, py::arg("n"))
        .def_property_readonly("L", [](const Scale& s) -> py::object {
            auto L = s.big_l();
            if (!L) return py::none();
            return py::float_(*L);
        })
        .def("__repr__", [](const Scale& s) { return "<Scale " + s.name() + ">"; });

    m.def("log_scale", &make_log_scale);
    m.def("power_scale", &make_power_scale, py::arg("m"));
    m.def("log_power_scale", &Scale::log_power, py::arg("q"));
    m.def("scaled_scale", &Scale::scaled, py::arg("c"), py::arg("base"));
    m.def("egorov_row", &Scale::egorov_row, py::arg("m"));

    py::enum_<Phase>(m, "Phase")
        .value("POSITIVE", Phase::Positive)
        .value("ALTERNATING", Phase::Alternating);

    py::class_<GrowthClass>(m, "GrowthClass")
        .def(py::init<double, double, double, double, Scale, Phase, int>(), py::arg("c0"),
             py::arg("s"), py::arg("gamma"), py::arg("delta"), py::arg("scale"),
             py::arg("phase") = Phase::Positive, py::arg("sign") = 1)
        .def("eval", &GrowthClass::eval, py::arg("n"))
        .def("eval_log", &GrowthClass::eval_log, py::arg("n"))
        .def_property_readonly("c0", &GrowthClass::c0)
        .def_property_readonly("s", &GrowthClass::s)
        .def_property_readonly("gamma", &GrowthClass::gamma)
        .def_property_readonly("delta", &GrowthClass::delta);

    py::class_<SymbolicSeq>(m, "SymbolicSeq")
        .def(py::init<GrowthClass>())
        .def_static("zero", &SymbolicSeq::zero)
        .def_static("from_terms", &SymbolicSeq::from_terms)
        .def("eval", &SymbolicSeq::eval, py::arg("n"))
        .def_property_readonly("is_zero", &SymbolicSeq::is_zero)
        .def_property_readonly("possible_cancellation", &SymbolicSeq::possible_cancellation)
        .def("dominant_term", &SymbolicSeq::dominant_term);

    m.def("seq_add", &seq_add);
    m.def("seq_mul", &seq_mul);
    m.def("gc_mul", &gc_mul);

    m.def("norm_exact", [](const SymbolicSeq& f, const Scale& r) {
        return norm_dict(norm_exact(f, r));
    });
    m.def("norm_estimate", [](const std::function<double(long)>& pf, const Scale& r, int max_exp) {
        return norm_dict(norm_estimate(pf, r, IndexLadder::geometric(max_exp)));
    }, py::arg("pf"), py::arg("scale"), py::arg("ladder_max_exp") = 20);
    m.def("classify", [](const SymbolicSeq& f, const Scale& r) {
        return seq_class_str(classify(f, r));
    });
    m.def("distance", [](const SymbolicSeq& f, const SymbolicSeq& g, const Scale& r) {
        return norm_dict(distance(f, g, r));
    });

    py::class_<GenNumber>(m, "GenNumber")
        .def_static("symbolic", &GenNumber::symbolic, py::arg("rep"), py::arg("scale"))
        .def_static("constant", &GenNumber::constant, py::arg("c"), py::arg("scale"))
        .def_static("zero", &GenNumber::zero, py::arg("scale"))
        .def_static("from_callable",
                    [](const std::function<std::complex<double>(long)>& f, const Scale& r) {
                        return GenNumber::callable(f, r);
                    })
        .def("eval", &GenNumber::eval, py::arg("n"))
        .def("norm", [](const GenNumber& x) { return norm_dict(x.norm()); })
        .def("classification",
             [](const GenNumber& x) { return seq_class_str(x.classification()); });

    m.def("gn_add", &gn_add);
    m.def("gn_mul", &gn_mul);
    m.def("gn_neg", &gn_neg);
    m.def("gn_sub", &gn_sub);
    m.def("unit_e_r", &unit_e_r, py::arg("scale"), py::arg("power") = 1.0);
    m.def("eq_quotient", [](const GenNumber& a, const GenNumber& b) {
        return verdict_dict(eq_quotient(a, b));
    });
    m.def("maddox_linf", [](const GenNumber& x) {
        MaddoxResult r = maddox_linf_test(x);
        py::dict d = verdict_dict(r.verdict);
        if (r.k) d["k"] = *r.k;
        return d;
    });
    m.def("maddox_c0", [](const GenNumber& x) {
        MaddoxResult r = maddox_c0_test(x);
        py::dict d = verdict_dict(r.verdict);
        if (r.k) d["k"] = *r.k;
        return d;
    });

    py::class_<CoeffFamily>(m, "CoeffFamily")
        .def_static("geometric", &CoeffFamily::geometric, py::arg("rho"))
        .def_static("constant", &CoeffFamily::constant)
        .def_static("power_law", &CoeffFamily::power_law, py::arg("alpha"))
        .def_static("sub_exp", &CoeffFamily::sub_exp, py::arg("beta"))
        .def_static("monomial", &CoeffFamily::monomial, py::arg("k"),
                    py::arg("c") = std::complex<double>(1, 0))
        .def("coeff", &CoeffFamily::coeff, py::arg("k"))
        .def("truncated", &CoeffFamily::truncated, py::arg("K"));

    m.def("qhat_lambda", &qhat_lambda, py::arg("family"), py::arg("lam"));
    m.def("q_lambda_numeric", &q_lambda_numeric, py::arg("family"), py::arg("lam"),
          py::arg("samples") = 4096);
    m.def("pm_norm", &pm_norm, py::arg("family"), py::arg("scale"));
    m.def("classify_coefficients", [](const CoeffFamily& c) {
        CoeffClassification r = classify_coefficients(c);
        py::dict d;
        d["label"] = coeff_class_str(r.label);
        d["analytic_norm"] = r.analytic_norm;
        d["log_norm"] = r.log_norm;
        return d;
    });

    py::class_<TorusGF>(m, "TorusGF")
        .def("coeff", [](const TorusGF& f, long n, long k) { return f.at(n).coeff(k); })
        .def("sup_norm", [](const TorusGF& f, long n) { return sup_circle(f.at(n)); });

    m.def("embed", &embed, py::arg("family"), py::arg("scale"));
    m.def("embed_cutoff", &embed_cutoff, py::arg("scale"), py::arg("n"));
    m.def("gf_mul", &gf_mul);
    m.def("pair", [](const TorusGF& f, const CoeffFamily& psi) { return pair_gf(f, psi); });
    m.def("delta_trace", [](const Scale& r) {
        std::vector<std::tuple<long, double, double>> rows;
        for (const auto& t : delta_unboundedness_trace(r))
            rows.emplace_back(t.n, t.p_value, t.powered_value);
        return rows;
    });

    m.def("null_test", [](const GenNumber& x) { return verdict_dict(null_test(x)); });
    m.def("s_assoc", [](const GenNumber& x, const GenNumber& y, double s) {
        return verdict_dict(s_assoc(x, y, s));
    });
    m.def("strong_assoc", [](const GenNumber& F, const GenNumber& G, double s) {
        return verdict_dict(strong_assoc(F, G, s));
    }, py::arg("F"), py::arg("G"), py::arg("s") = 0.0);

    m.def("classify_asymptotic", [](const SymbolicSeq& f, const std::string& kind) {
        py::dict d;
        if (kind == "infra-exp") {
            A2Classification c = classify_A_secondkind(f);
            d["label"] = a_class2_str(c.label);
            return d;
        }
        AsymptoticScale a =
            kind == "exp-iter" ? make_iterexp_asymptotic() : make_polynomial_asymptotic();
        AClassification c = classify_A(f, a);
        d["label"] = a_class_str(c.label);
        if (c.witness_m) d["witness_m"] = *c.witness_m;
        return d;
    }, py::arg("f"), py::arg("kind") = "polynomial");

    m.def("check_temperate", [](const std::string& phi) {
        TemperateMapSpec spec;
        if (phi == "square") spec = square_map_spec();
        else if (phi == "exp") spec = exp_map_spec();
        else if (phi.rfind("linear:", 0) == 0) spec = linear_map_spec(std::stod(phi.substr(7)));
        else throw InvalidParameter("unknown map " + phi);
        TemperateReport rep = check_temperate(spec, make_colombeau_family(),
                                              default_probe_grid(make_log_scale()),
                                              default_negligible_probes());
        return verdict_dict(rep.overall);
    });

#ifdef VERSION_INFO
#define SEQGF_STR(x) #x
#define SEQGF_XSTR(x) SEQGF_STR(x)
    m.attr("__version__") = SEQGF_XSTR(VERSION_INFO);
#else
    m.attr("__version__") = "0.1.0";
#endif
}
