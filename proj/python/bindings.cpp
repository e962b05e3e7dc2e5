#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "holoform/experiment.hpp"
#include "holoform/odesolve.hpp"
#include "holoform/specparse.hpp"

namespace py = pybind11;
using namespace holoform;

PYBIND11_MODULE(_core, m) {
  m.doc() = "holoform core: weights, disc geometry, series, norms, ODE series solutions";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<WeightFun>(m, "WeightFun")
      .def_static("power", &WeightFun::power, py::arg("q"))
      .def_static("power_log", &WeightFun::power_log, py::arg("q"), py::arg("beta"))
      .def_static("tabulated", &WeightFun::tabulated, py::arg("knots"))
      .def_static("parse", &parse_weight, py::arg("spec"))
      .def("__call__", &WeightFun::operator(), py::arg("t"))
      .def("describe", &WeightFun::describe);

  m.def("eval_phi_K", &eval_phi_K, py::arg("w"), py::arg("x"));

  py::class_<ConditionReport>(m, "ConditionReport")
      .def_readonly("holds_11", &ConditionReport::holds_11)
      .def_readonly("value_11", &ConditionReport::value_11)
      .def_readonly("holds_12", &ConditionReport::holds_12)
      .def_readonly("value_12", &ConditionReport::value_12)
      .def_readonly("sigma", &ConditionReport::sigma);
  m.def("check_conditions", &check_conditions, py::arg("w"), py::arg("sigma"));

  m.def(
      "disc_quadrature",
      [](int J, int M) {
        const DiscQuadrature Q = disc_quadrature(J, M);
        return py::make_tuple(Q.nodes, Q.weights);
      },
      py::arg("J"), py::arg("M"), "(nodes, weights) of the normalized-area disc rule");
  m.def("mobius", &mobius, py::arg("a"), py::arg("z"));
  m.def("mobius_defect", &mobius_defect, py::arg("a"), py::arg("z"));
  m.def("green", &green, py::arg("a"), py::arg("z"));

  py::class_<TruncSeries>(m, "TruncSeries")
      .def(py::init<std::vector<cplx>>(), py::arg("coeffs"))
      .def_property_readonly("degree", &TruncSeries::degree)
      .def_property_readonly("coeffs", &TruncSeries::coeffs)
      .def("derivative", &TruncSeries::derivative, py::arg("k") = 1)
      .def("__call__", [](const TruncSeries& f, cplx z) { return eval(f, z); }, py::arg("z"));

  m.def(
      "make_function", [](const std::string& spec, int N) { return make_test_function(parse_function(spec), N); },
      py::arg("spec"), py::arg("N") = 256, "test function from a spec such as 'gap:beta=0.5'");
  m.def(
      "frac_deriv_coeff",
      [](const TruncSeries& f, double t, double b) { return frac_deriv_coeff(f, FracParams::make(t, b)); },
      py::arg("f"), py::arg("t"), py::arg("b"));
  m.def(
      "besov_norm",
      [](const TruncSeries& f, const std::string& space, int J, int M) {
        return besov_norm(f, parse_space(space), disc_quadrature(J, M));
      },
      py::arg("f"), py::arg("space"), py::arg("J") = 8, py::arg("M") = 512);

  m.def(
      "solve_ode_series",
      [](const std::vector<TruncSeries>& A, const TruncSeries& rhs, const std::vector<cplx>& init, int N) {
        ODESystem sys;
        sys.n = static_cast<int>(A.size());
        sys.A = A;
        sys.rhs = rhs;
        sys.init = init;
        return solve_ode_series(sys, N);
      },
      py::arg("A"), py::arg("rhs"), py::arg("init"), py::arg("N"));

  m.def(
      "run_experiment",
      [](const std::string& command, const py::kwargs& kw) {
        ExperimentConfig cfg;
        cfg.command = command;
        for (const auto& [k, v] : kw) {
          const std::string key = py::str(k);
          if (key == "space") cfg.space = v.cast<std::string>();
          else if (key == "f") cfg.function = v.cast<std::string>();
          else if (key == "theorem") cfg.theorem = v.cast<std::string>();
          else if (key == "params") cfg.params_path = v.cast<std::string>();
          else if (key == "system") cfg.system_path = v.cast<std::string>();
          else if (key == "quad_depth") cfg.quad_depth = v.cast<int>();
          else if (key == "quad_angles") cfg.quad_angles = v.cast<int>();
          else if (key == "sup_depth") cfg.sup_depth = v.cast<int>();
          else if (key == "sup_rotations") cfg.sup_rotations = v.cast<int>();
          else if (key == "terms") cfg.terms = v.cast<int>();
          else if (key == "slack") cfg.slack = v.cast<double>();
          else if (key == "seed") cfg.seed = v.cast<std::uint64_t>();
          else throw py::key_error("unknown option " + key);
        }
        const ResultTable t = run_experiment(cfg);
        return py::make_tuple(t.all_pass(), to_csv(t));
      },
      py::arg("command"), "(all_pass, csv) for one CLI command");
}
