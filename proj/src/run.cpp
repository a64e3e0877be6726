#include "pbedg/run.hpp"

#include <cmath>
#include <future>
#include <limits>
#include <utility>

#include "pbedg/errors.hpp"
#include "pbedg/flux.hpp"

namespace pbedg {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

CaseRun run_case(const BenchmarkCase& bench, const SolverOptions& opts) {
  SolverOptions o = opts;
  if (o.quad_points <= 0) o.quad_points = o.degree + 1;
  const Mesh mesh = Mesh::geometric(o.cells, bench.x_min, o.span_exponent);
  const QuadratureRule rule = QuadratureRule::gauss(o.quad_points);
  const BreakageTables tables = build_breakage_tables(mesh, rule, bench.kernels);
  const DGState start =
      initialize(bench.initial, mesh, o.degree, rule, o.time.limiter_enabled, o.time.limiter_mode);
  auto [state, trace] = advance(start, mesh, rule, bench.kernels, tables, o.time);

  double ec = kNaN, ed = kNaN;
  if (bench.has_solution() && state.time <= bench.t_max) {
    const double t = state.time;
    auto reference = [&bench, t](double x) { return bench.solution(x, t); };
    ec = error_continuous(state, mesh, reference);
    ed = error_discrete(state, mesh, rule, reference);
  }
  return CaseRun{bench.id, o, mesh, std::move(state), std::move(trace), ec, ed};
}

EocResult eoc_battery(const BenchmarkCase& bench, const std::vector<int>& cells_list,
                      const SolverOptions& base) {
  if (cells_list.empty()) throw InvalidArgument("eoc_battery: empty mesh list");
  for (size_t i = 1; i < cells_list.size(); ++i) {
    if (cells_list[i] != 2 * cells_list[i - 1]) {
      throw InvalidArgument("eoc_battery: mesh sizes must double");
    }
  }
  const bool self = !bench.has_solution() || base.time.t_end > bench.t_max;

  std::vector<int> sizes = cells_list;
  if (self) sizes.push_back(2 * cells_list.back());

  std::vector<std::future<CaseRun>> jobs;
  jobs.reserve(sizes.size());
  for (int n : sizes) {
    SolverOptions o = base;
    o.cells = n;
    jobs.push_back(std::async(std::launch::async, run_case, std::cref(bench), o));
  }
  EocResult result;
  result.self_convergence = self;
  for (auto& job : jobs) result.runs.push_back(job.get());

  const std::string tag = bench.id + " k=" + std::to_string(base.degree);
  std::vector<double> ec, ed;
  for (size_t i = 0; i < cells_list.size(); ++i) {
    if (self) {
      const CaseRun& coarse = result.runs[i];
      const CaseRun& fine = result.runs[i + 1];
      ec.push_back(self_error(coarse.state, coarse.mesh, fine.state, fine.mesh));
    } else {
      ec.push_back(result.runs[i].err_continuous);
      ed.push_back(result.runs[i].err_discrete);
    }
  }
  result.continuous = make_convergence_table(tag + " continuous", cells_list, ec);
  if (!self) result.discrete = make_convergence_table(tag + " discrete", cells_list, ed);
  if (self) result.discrete.label = tag + " discrete (unavailable: self-convergence)";
  return result;
}

std::vector<MomentSample> moment_series(const CaseRun& run) {
  std::vector<MomentSample> rows;
  for (const OutputSample& out : run.trace.outputs) {
    rows.push_back({out.time, moments(out.state, run.mesh)});
  }
  if (rows.empty() || rows.back().time < run.state.time) {
    rows.push_back({run.state.time, moments(run.state, run.mesh)});
  }
  return rows;
}

}  // namespace pbedg
