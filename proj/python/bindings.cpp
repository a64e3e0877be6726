// Python module exposing the solver's main operations: benchmark catalog,
// meshes, states, initialization, time advancement, limiting, and the
// error/moment diagnostics. Heavy numerics stay in C++; densities cross the
// boundary as plain lists and Python callables are accepted wherever the C++
// side takes a std::function.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pbedg/errors.hpp"
#include "pbedg/run.hpp"

namespace py = pybind11;
using namespace pbedg;

namespace {

std::vector<std::vector<double>> state_coefficients(const DGState& state) {
  std::vector<std::vector<double>> rows(state.cells());
  for (int j = 0; j < state.cells(); ++j) {
    rows[j].resize(state.degree + 1);
    for (int i = 0; i <= state.degree; ++i) rows[j][i] = state.coeffs(j, i);
  }
  return rows;
}

std::vector<double> state_averages(const DGState& state) {
  std::vector<double> avg(state.cells());
  for (int j = 0; j < state.cells(); ++j) avg[j] = state.cell_average(j);
  return avg;
}

}  // namespace

PYBIND11_MODULE(_pbedg, m) {
  m.doc() = "Positivity-preserving DG solver for coagulation-fragmentation "
            "population balance equations";

  py::register_exception<Error>(m, "SolverError");

  py::enum_<TimeMethod>(m, "TimeMethod")
      .value("euler", TimeMethod::kEuler)
      .value("ssp_rk2", TimeMethod::kSspRk2)
      .value("ssp_rk3", TimeMethod::kSspRk3);

  py::enum_<LimiterMode>(m, "LimiterMode")
      .value("full_cell", LimiterMode::kFullCell)
      .value("gauss_only", LimiterMode::kGaussOnly);

  py::class_<Mesh>(m, "Mesh")
      .def_static("geometric", &Mesh::geometric, py::arg("cells"), py::arg("x_min"),
                  py::arg("span_exponent") = kDefaultSpanExponent,
                  "Geometric mesh on [0, x_min * 2^span]: first interior interface "
                  "at x_min, each next one a constant ratio further out")
      .def_static("from_interfaces", &Mesh::from_interfaces, py::arg("interfaces"))
      .def_property_readonly("cells", &Mesh::cells)
      .def("interface", &Mesh::interface, py::arg("i"))
      .def("width", &Mesh::width, py::arg("j"))
      .def("midpoint", &Mesh::midpoint, py::arg("j"))
      .def("__repr__", [](const Mesh& mesh) {
        return "Mesh(" + std::to_string(mesh.cells()) + " cells, (0, " +
               std::to_string(mesh.interface(mesh.cells())) + "])";
      });

  py::class_<QuadratureRule>(m, "QuadratureRule")
      .def_static("gauss", &QuadratureRule::gauss, py::arg("points"))
      .def_property_readonly("order", &QuadratureRule::order)
      .def("node", &QuadratureRule::node, py::arg("a"))
      .def("weight", &QuadratureRule::weight, py::arg("a"));

  py::class_<DGState>(m, "DGState")
      .def(py::init<int, int, double>(), py::arg("cells"), py::arg("degree"),
           py::arg("time") = 0.0)
      .def_property_readonly("cells", &DGState::cells)
      .def_readonly("degree", &DGState::degree)
      .def_readonly("time", &DGState::time)
      .def("cell_average", &DGState::cell_average, py::arg("j"))
      .def("averages", &state_averages)
      .def("coefficients", &state_coefficients,
           "Per-cell Legendre coefficients, one row per cell")
      .def("set_coefficient",
           [](DGState& state, int j, int i, double value) { state.coeffs(j, i) = value; },
           py::arg("j"), py::arg("i"), py::arg("value"))
      .def("eval_ref", &eval_state_ref, py::arg("j"), py::arg("xi"),
           "Density at reference coordinate xi in [-1, 1] of cell j");

  py::class_<KernelSet>(m, "KernelSet")
      .def_static("builtin", &KernelSet::builtin, py::arg("id"))
      .def_static("hill_ng", &KernelSet::hill_ng, py::arg("p"), py::arg("m"),
                  "Power-law multiple fragmentation: p fragments, selection x^m")
      .def_readonly("has_aggregation", &KernelSet::has_aggregation)
      .def_readonly("has_breakage", &KernelSet::has_breakage);

  py::class_<BenchmarkCase>(m, "BenchmarkCase")
      .def_readonly("id", &BenchmarkCase::id)
      .def_readonly("description", &BenchmarkCase::description)
      .def_readonly("kernels", &BenchmarkCase::kernels)
      .def_readonly("x_min", &BenchmarkCase::x_min)
      .def_readonly("t_max", &BenchmarkCase::t_max)
      .def("has_solution", &BenchmarkCase::has_solution)
      .def("initial", [](const BenchmarkCase& bc, double x) { return bc.initial(x); },
           py::arg("x"))
      .def("solution",
           [](const BenchmarkCase& bc, double x, double t) {
             if (!bc.has_solution()) throw InvalidArgument(bc.id + ": no closed form");
             return bc.solution(x, t);
           },
           py::arg("x"), py::arg("t"));

  m.def("case_ids", [] { return case_ids(); });
  m.def("make_case", &make_case, py::arg("id"));

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("t_end", &RunConfig::t_end)
      .def_readwrite("dt_initial", &RunConfig::dt_initial)
      .def_readwrite("method", &RunConfig::method)
      .def_readwrite("limiter_enabled", &RunConfig::limiter_enabled)
      .def_readwrite("limiter_mode", &RunConfig::limiter_mode)
      .def_readwrite("use_cfl_bound", &RunConfig::use_cfl_bound)
      .def_readwrite("cfl_safety", &RunConfig::cfl_safety)
      .def_readwrite("max_halvings", &RunConfig::max_halvings)
      .def_readwrite("output_times", &RunConfig::output_times)
      .def_readwrite("dt_regrow", &RunConfig::dt_regrow)
      .def_readwrite("regrow_after", &RunConfig::regrow_after);

  py::class_<HalvingEvent>(m, "HalvingEvent")
      .def_readonly("time", &HalvingEvent::time)
      .def_readonly("dt_before", &HalvingEvent::dt_before);

  py::class_<OutputSample>(m, "OutputSample")
      .def_readonly("time", &OutputSample::time)
      .def_readonly("state", &OutputSample::state)
      .def_readonly("mass", &OutputSample::mass);

  py::class_<RunTrace>(m, "RunTrace")
      .def_readonly("steps", &RunTrace::steps)
      .def_readonly("halvings", &RunTrace::halvings)
      .def_readonly("initial_mass", &RunTrace::initial_mass)
      .def_readonly("final_mass", &RunTrace::final_mass)
      .def_readonly("boundary_outflux", &RunTrace::boundary_outflux)
      .def_readonly("limiter_touched_total", &RunTrace::limiter_touched_total)
      .def_readonly("min_theta", &RunTrace::min_theta)
      .def_readonly("outputs", &RunTrace::outputs)
      .def_readonly("wall_seconds", &RunTrace::wall_seconds);

  py::class_<LimiterReport>(m, "LimiterReport")
      .def_readonly("thetas", &LimiterReport::thetas)
      .def_readonly("skipped_cells", &LimiterReport::skipped_cells)
      .def_readonly("touched", &LimiterReport::touched)
      .def_readonly("min_theta", &LimiterReport::min_theta)
      .def_readonly("mode", &LimiterReport::mode);

  py::class_<BreakageTables>(m, "BreakageTables");
  m.def("build_breakage_tables", &build_breakage_tables, py::arg("mesh"), py::arg("rule"),
        py::arg("kernels"));

  m.def("initialize", &initialize, py::arg("n0"), py::arg("mesh"), py::arg("degree"),
        py::arg("rule"), py::arg("limiter_enabled") = true,
        py::arg("limiter_mode") = LimiterMode::kFullCell,
        py::arg("projection_order") = 16,
        py::arg("zero_average_floor") = kDefaultZeroAverageFloor,
        "L2-project an initial mass density, rescue underflowed tail averages, "
        "then apply one limiter pass");

  m.def("advance", &advance, py::arg("state"), py::arg("mesh"), py::arg("rule"),
        py::arg("kernels"), py::arg("tables"), py::arg("config"),
        "Advance to config.t_end; returns (state, trace)");

  m.def("limit_state", &limit_state, py::arg("state"), py::arg("mesh"), py::arg("rule"),
        py::arg("mode") = LimiterMode::kFullCell,
        "Scale cell polynomials about their averages to restore nonnegativity; "
        "returns (state, report)");

  m.def("cfl_max_dt", &cfl_max_dt, py::arg("state"), py::arg("mesh"), py::arg("rule"),
        py::arg("kernels"), py::arg("tables"),
        "Largest forward-Euler step for which positive averages stay positive");

  m.def("moments", &moments, py::arg("state"), py::arg("mesh"), py::arg("max_order") = 5,
        py::arg("order") = 16, "Number-density moments M_0..M_max_order");
  m.def("aggregation_extent", &aggregation_extent, py::arg("m0_now"),
        py::arg("m0_initial"));

  m.def("error_continuous", &error_continuous, py::arg("state"), py::arg("mesh"),
        py::arg("reference"), py::arg("order") = 16);
  m.def("error_discrete", &error_discrete, py::arg("state"), py::arg("mesh"),
        py::arg("rule"), py::arg("reference"));
  m.def("self_error", &self_error, py::arg("coarse_state"), py::arg("coarse_mesh"),
        py::arg("fine_state"), py::arg("fine_mesh"), py::arg("order") = 16);
  m.def("eoc", &eoc, py::arg("error_coarse"), py::arg("error_fine"));
  m.def("pde_residual", &pde_residual, py::arg("kernels"), py::arg("n"), py::arg("x"),
        py::arg("t"), py::arg("domain_cap") = 200.0,
        "Residual of the mass-conservation form at one point, fluxes rebuilt "
        "by adaptive quadrature");
}
