#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "exobessel/errors.hpp"
#include "exobessel/kernels.hpp"
#include "exobessel/norms.hpp"
#include "exobessel/operators.hpp"
#include "exobessel/sharpness.hpp"
#include "exobessel/special.hpp"
#include "exobessel/verify.hpp"

#include <optional>

namespace py = pybind11;
using namespace exobessel;

namespace {

Setting setting_of(const std::string& s) {
    if (s == "cls")
        return Setting::cls;
    if (s == "exo")
        return Setting::exo;
    throw std::domain_error("setting must be 'cls' or 'exo'");
}

HardyKind hardy_of(const std::string& s) {
    if (s == "H0")
        return HardyKind::H0;
    if (s == "Hinf")
        return HardyKind::Hinf;
    if (s == "H0log")
        return HardyKind::H0log;
    if (s == "Hinflog")
        return HardyKind::Hinflog;
    throw std::domain_error("hardy kind must be H0|Hinf|H0log|Hinflog");
}

std::string tri_str(Tri t) {
    switch (t) {
        case Tri::holds: return "holds";
        case Tri::fails: return "fails";
        case Tri::open: return "open";
    }
    return "?";
}

std::string flag_str(NormFlag f) {
    switch (f) {
        case NormFlag::finite: return "finite";
        case NormFlag::divergent: return "divergent";
        case NormFlag::inconclusive: return "inconclusive";
    }
    return "?";
}

Interp interp_of(const std::string& s) {
    if (s == "pc")
        return Interp::piecewise_constant;
    if (s == "linear")
        return Interp::linear;
    throw std::domain_error("interp must be 'pc' or 'linear'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "classical and exotic Bessel harmonic-analysis operators";

    py::register_exception<numerics_error>(m, "NumericsError", PyExc_ArithmeticError);

    // special functions
    m.def("gamma_real", &gamma_real, py::arg("x"));
    m.def(
        "bessel_i",
        [](double mu, double w) {
            const BesselEval e = bessel_i(Order(mu), w);
            py::dict d;
            d["value"] = e.value;
            d["scaled_value"] = e.scaled_value;
            d["regime"] = e.regime == BesselRegime::series ? "series" : "asymptotic";
            d["overflowed"] = e.overflowed;
            return d;
        },
        py::arg("mu"), py::arg("w"));
    m.def(
        "scaled_ratio",
        [](double mu, double w) { return scaled_ratio(Order(mu), w); },
        py::arg("mu"), py::arg("w"), "w^{-mu} I_mu(w), continuous at w = 0");

    // grid functions and time grids
    py::class_<GridFunction>(m, "GridFunction")
        .def(py::init([](std::vector<double> xs, std::vector<double> vs,
                         const std::string& interp) {
                 return GridFunction(std::move(xs), std::move(vs), interp_of(interp));
             }),
             py::arg("abscissae"), py::arg("values"), py::arg("interp") = "linear")
        .def_static("indicator", &GridFunction::indicator, py::arg("a"), py::arg("b"))
        .def_readwrite("power_weight", &GridFunction::power_weight)
        .def("__call__", &GridFunction::operator())
        .def_property_readonly("abscissae", &GridFunction::abscissae)
        .def_property_readonly("values", &GridFunction::values);

    py::class_<TimeGrid>(m, "TimeGrid")
        .def(py::init<double, double, int>(), py::arg("t_min"), py::arg("t_max"),
             py::arg("count"))
        .def(py::init<>())
        .def("nodes", &TimeGrid::nodes);

    // kernels
    m.def("heat_classical", &heat_classical);
    m.def("heat_exotic", &heat_exotic);
    m.def("heat_at_zero", &heat_at_zero);
    m.def(
        "heat_time_derivative",
        [](const std::string& st, double nu, double t, double x, double y) {
            return heat_time_derivative(setting_of(st), nu, t, x, y);
        },
        py::arg("setting"), py::arg("nu"), py::arg("t"), py::arg("x"), py::arg("y"));
    m.def("poisson_classical",
          [](double mu, double t, double x, double y) {
              return poisson_classical(mu, t, x, y);
          });
    m.def("poisson_exotic", [](double nu, double t, double x, double y) {
        return poisson_exotic(nu, t, x, y);
    });
    m.def("comp_potential_classical", [](double mu, double x, double y) {
        return comp_potential_classical(mu, x, y);
    });
    m.def("riesz_classical_kernel", [](double nu, double x, double y) {
        return riesz_classical_kernel(nu, x, y);
    });
    m.def("riesz_exotic_kernel", [](double nu, double x, double y) {
        return riesz_exotic_kernel(nu, x, y);
    });
    m.def("potential_kernel",
          [](const std::string& st, double nu, double sigma, double x, double y) {
              return potential_kernel(setting_of(st), nu, sigma, x, y);
          });
    m.def("chapman_kolmogorov_residual",
          [](const std::string& st, double nu, double t, double s, double x, double y) {
              return chapman_kolmogorov_residual(setting_of(st), nu, t, s, x, y);
          });

    // operators
    m.def("apply_heat",
          [](const std::string& st, double nu, double t, const GridFunction& f,
             double x) { return apply_heat(setting_of(st), nu, t, f, x); });
    m.def("heat_maximal",
          [](const std::string& st, double nu, const GridFunction& f, double x,
             const TimeGrid& tg) {
              return heat_maximal(setting_of(st), nu, f, x, tg);
          });
    m.def("apply_poisson", [](double nu, double t, const GridFunction& f, double x) {
        return apply_poisson(nu, t, f, x);
    });
    m.def("poisson_maximal",
          [](double nu, const GridFunction& f, double x, const TimeGrid& tg) {
              return poisson_maximal(nu, f, x, tg);
          });
    m.def("g_function",
          [](const std::string& st, double nu, const GridFunction& f, double x,
             const TimeGrid& tg) {
              return g_function(setting_of(st), nu, f, x, tg);
          });
    m.def("local_g", [](double nu, const GridFunction& f, double x, const TimeGrid& tg) {
        return local_g(nu, f, x, tg);
    });
    m.def("hardy",
          [](const std::string& kind, double xi, double b, const GridFunction& f,
             double x) { return hardy(hardy_of(kind), xi, b, f, x); },
          py::arg("kind"), py::arg("xi"), py::arg("b"), py::arg("f"), py::arg("x"));
    m.def("local_hilbert_pv",
          [](double nu, const GridFunction& f, double x, double b) {
              return local_hilbert_pv(nu, f, x, b);
          },
          py::arg("nu"), py::arg("f"), py::arg("x"), py::arg("b") = 2.0);
    m.def("mloc", &mloc);
    m.def("n_op", &n_op, py::arg("f"), py::arg("x"), py::arg("b") = 2.0);
    m.def("nlog_op", &nlog_op, py::arg("f"), py::arg("x"), py::arg("b") = 2.0);
    m.def("tpsi", [](double xi, double eps, double c, const GridFunction& f, double x,
                     const TimeGrid& tg) { return tpsi(xi, eps, c, f, x, tg); });
    m.def("riesz_apply", [](const std::string& st, double nu, const GridFunction& f,
                            double x) { return riesz_apply(setting_of(st), nu, f, x); });
    m.def("riesz_adjoint_apply",
          [](const std::string& st, double nu, const GridFunction& f, double x) {
              return riesz_adjoint_apply(setting_of(st), nu, f, x);
          });
    m.def("frac_integral_apply",
          [](const std::string& st, double nu, double sigma, const GridFunction& f,
             double x) { return frac_integral_apply(setting_of(st), nu, sigma, f, x); });

    // norms
    auto norm_pair = [](const NormResult& r) {
        return py::make_tuple(r.value, flag_str(r.flag));
    };
    m.def("lp_norm", [norm_pair](const GridFunction& f, double p, double delta) {
        return norm_pair(lp_norm(f, p, delta));
    });
    m.def("weak_lp_quasinorm",
          [norm_pair](const GridFunction& f, double p, double delta) {
              return norm_pair(weak_lp_quasinorm(f, p, delta));
          });
    m.def("lorentz_p1_norm",
          [norm_pair](const GridFunction& f, double p, double delta) {
              return norm_pair(lorentz_p1_norm(f, p, delta));
          });

    // phase diagrams
    m.def(
        "classify",
        [](const std::string& id, double nu, double p, double delta,
           std::optional<double> sigma) {
            const Verdict v = classify(theorem_from_string(id), nu, p, delta, sigma);
            py::dict d;
            d["strong"] = tri_str(v.strong);
            d["weak"] = tri_str(v.weak);
            d["rwt"] = tri_str(v.rwt);
            return d;
        },
        py::arg("theorem"), py::arg("nu"), py::arg("p"), py::arg("delta"),
        py::arg("sigma") = py::none());
    m.def(
        "scan_region_csv",
        [](const std::string& id, double nu, const std::string& p_range,
           const std::string& delta_range, std::optional<double> sigma) {
            return region_csv(scan_region(theorem_from_string(id), nu,
                                          parse_range(p_range),
                                          parse_range(delta_range), sigma));
        },
        py::arg("theorem"), py::arg("nu"), py::arg("p_range"), py::arg("delta_range"),
        py::arg("sigma") = py::none());
    m.def(
        "transference_check",
        [](const std::string& pair, double nu, double p, double delta,
           std::optional<double> sigma) {
            TransferPair tp;
            if (pair == "MaxW")
                tp = TransferPair::MaxW;
            else if (pair == "G")
                tp = TransferPair::G;
            else if (pair == "Pot")
                tp = TransferPair::Pot;
            else
                throw std::domain_error("pair must be MaxW|G|Pot");
            return transference_check(tp, nu, p, delta, sigma);
        },
        py::arg("pair"), py::arg("nu"), py::arg("p"), py::arg("delta"),
        py::arg("sigma") = py::none());

    // verification
    m.def("run_suite_json", [](const std::string& name) {
        return run_suite(name).to_json();
    });
    m.def("suite_names", &suite_names);
}
