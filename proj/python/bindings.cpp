#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hardylab/classes.hpp"
#include "hardylab/errors.hpp"
#include "hardylab/factorization.hpp"
#include "hardylab/hb_space.hpp"
#include "hardylab/lab/scenarios.hpp"
#include "hardylab/operators.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace hardylab;

namespace {

FourierSeries series_from(const std::vector<cplx>& taylor) { return FourierSeries::from_taylor(taylor); }

std::vector<cplx> taylor_of(const FourierSeries& f) {
    return f.taylor(std::max(f.order(), 0) + 1);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spectral experiments on de Branges-Rovnyak spaces";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<GridError>(m, "GridError", error.ptr());
    py::register_exception<DomainError>(m, "DomainError", error.ptr());
    py::register_exception<DimensionError>(m, "DimensionError", error.ptr());
    py::register_exception<NumericalError>(m, "NumericalError", error.ptr());
    py::register_exception<ExtremePointError>(m, "ExtremePointError", error.ptr());
    py::register_exception<lab::ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Settings>(m, "Settings")
        .def(py::init<>())
        .def(py::init([](int working_order, int grid_size, double boundary_radius) {
                 return Settings{working_order, grid_size, boundary_radius};
             }),
             "working_order"_a, "grid_size"_a, "boundary_radius"_a)
        .def_readwrite("working_order", &Settings::working_order)
        .def_readwrite("grid_size", &Settings::grid_size)
        .def_readwrite("boundary_radius", &Settings::boundary_radius);

    py::class_<FourierSeries>(m, "FourierSeries")
        .def(py::init<>())
        .def(py::init(&series_from), "taylor"_a, "Analytic series from Taylor coefficients c_0, c_1, ...")
        .def_property_readonly("order", &FourierSeries::order)
        .def("__getitem__", [](const FourierSeries& f, int n) { return f[n]; })
        .def("taylor", [](const FourierSeries& f, int count) { return f.taylor(count); }, "count"_a)
        .def("is_analytic", &FourierSeries::is_analytic, "tol"_a = 0.0)
        .def("l2_norm", &FourierSeries::l2_norm)
        .def("__repr__", [](const FourierSeries& f) { return "<FourierSeries order=" + std::to_string(f.order()) + ">"; });

    py::class_<PythagoreanPair>(m, "PythagoreanPair")
        .def(py::init([](const std::vector<cplx>& b, const std::vector<cplx>& a) {
                 return PythagoreanPair{series_from(b), series_from(a)};
             }),
             "b"_a, "a"_a)
        .def_property_readonly("b", [](const PythagoreanPair& p) { return p.b; })
        .def_property_readonly("a", [](const PythagoreanPair& p) { return p.a; })
        .def("defect", [](const PythagoreanPair& p, int grid_size) { return pair_defect(p, grid_size); },
             "grid_size"_a = Settings{}.grid_size);

    m.def("pythagorean_mate",
          [](const std::vector<cplx>& b, double tol, const Settings& s) {
              return pythagorean_mate(series_from(b), tol, {}, s);
          },
          "b"_a, "tol"_a = 1e-9, "settings"_a = Settings{});
    m.def("non_extremality_margin",
          [](const std::vector<cplx>& b, const Settings& s) { return non_extremality_margin(series_from(b), {}, s); },
          "b"_a, "settings"_a = Settings{});

    py::class_<PythagoreanFactorization>(m, "Factorization")
        .def_property_readonly("pair", [](const PythagoreanFactorization& f) { return f.pair; })
        .def_readonly("c", &PythagoreanFactorization::c)
        .def_readonly("residual", &PythagoreanFactorization::recombination_residual);
    m.def("factorize_rational",
          [](const std::vector<cplx>& num, const std::vector<cplx>& den, double tol, const Settings& s) {
              const RationalFunction h{num, den};
              return pythagorean_factorize(h, h.inner_part(), tol, s);
          },
          "numerator"_a, "denominator"_a, "tol"_a = 1e-6, "settings"_a = Settings{},
          "Pythagorean factorization of num/den; zeros of num inside the disk form the inner factor.");

    py::class_<MateSolution>(m, "MateSolution")
        .def_readonly("f", &MateSolution::f)
        .def_readonly("f_plus", &MateSolution::f_plus)
        .def_readonly("residual", &MateSolution::residual)
        .def_readonly("hb_norm", &MateSolution::hb_norm)
        .def_readonly("dim", &MateSolution::dim)
        .def_readonly("condition", &MateSolution::condition)
        .def_readonly("ill_conditioned", &MateSolution::ill_conditioned);
    m.def("solve_mate", [](const PythagoreanPair& p, const std::vector<cplx>& f, int dim) {
        return solve_mate(p, series_from(f), dim);
    }, "pair"_a, "f"_a, "dim"_a);

    m.def("toeplitz_preimage",
          [](const std::vector<cplx>& mm, const std::vector<cplx>& a, int dim) {
              const auto pre = toeplitz_preimage(series_from(mm), series_from(a), dim);
              return py::dict("u"_a = pre.u, "residual"_a = pre.residual, "condition"_a = pre.condition,
                              "ill_conditioned"_a = pre.ill_conditioned);
          },
          "m"_a, "a"_a, "dim"_a);

    m.def("lotto_sarason_check",
          [](const PythagoreanPair& p, const std::vector<cplx>& mm, const std::vector<int>& dims) {
              const auto r = lotto_sarason_check(p, series_from(mm), dims);
              return py::dict("verdict"_a = to_string(r.verdict), "u_garsia"_a = r.u_garsia,
                              "mate_garsia"_a = r.mate_garsia, "growth_ratio"_a = r.growth_ratio,
                              "ill_conditioned"_a = r.ill_conditioned);
          },
          "pair"_a, "m"_a, "dims"_a);

    m.def("hankel_continuity_probe",
          [](const std::vector<cplx>& mm, const std::string& space, const std::vector<int>& dims, double exponent) {
              ProbeSpace ps;
              if (space == "hp") ps = ProbeSpace::hp(exponent);
              else if (space == "privalov") ps = ProbeSpace::privalov(exponent);
              else if (space == "smirnov") ps = ProbeSpace::smirnov();
              else throw py::value_error("space must be 'hp', 'privalov' or 'smirnov'");
              const auto r = hankel_continuity_probe(series_from(mm), ps, dims);
              return py::dict("verdict"_a = to_string(r.verdict), "norms"_a = r.norms,
                              "growth_ratio"_a = r.growth_ratio);
          },
          "m"_a, "space"_a, "dims"_a, "exponent"_a = 1.0);

    m.def("commutation_residual",
          [](const std::vector<cplx>& g1, const std::vector<cplx>& g2, int dim) {
              return commutation_residual(series_from(g1), series_from(g2), dim);
          },
          "g1"_a, "g2"_a, "dim"_a);

    m.def("gevrey_fit", [](const std::vector<cplx>& f) {
        const auto fit = gevrey_fit(series_from(f));
        return py::dict("c"_a = fit.c, "alpha"_a = fit.alpha, "residual"_a = fit.residual,
                        "verdict"_a = to_string(fit.verdict));
    }, "f"_a);

    m.def("parse_function", [](const std::string& text, const Settings& s) {
        return taylor_of(lab::to_series(lab::parse_function_spec(text), s));
    }, "text"_a, "settings"_a = Settings{}, "Taylor coefficients of a function-spec string.");

    m.def("run_scenario",
          [](const std::string& config_text, const std::string& scenario) {
              auto config = config_text.empty() ? lab::default_config(scenario) : lab::parse_config(config_text);
              if (!scenario.empty()) config.scenario = scenario;
              py::gil_scoped_release release;
              return lab::to_json_text(lab::run_scenario(config));
          },
          "config_text"_a = "", "scenario"_a = "",
          "Runs a scenario from INI text (or its defaults) and returns the report as deterministic JSON text.");
}
