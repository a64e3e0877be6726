// Command-line front end for the population-balance DG solver.
//
//   pbedg cases                 list the benchmark catalog
//   pbedg run  --case ID ...    one solver run, report on stdout and as JSON
//   pbedg eoc  --case ID ...    convergence study over doubling meshes
//
// Exit status: 0 on success, 1 on solver errors (diverged runs, exhausted
// halving budgets), 2 on bad command lines.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pbedg/errors.hpp"
#include "pbedg/run.hpp"

using json = nlohmann::ordered_json;
using namespace pbedg;

namespace {

const std::map<std::string, TimeMethod> kMethods{
    {"euler", TimeMethod::kEuler},
    {"ssp-rk2", TimeMethod::kSspRk2},
    {"ssp-rk3", TimeMethod::kSspRk3},
};

const std::map<std::string, LimiterMode> kLimiterModes{
    {"full-cell", LimiterMode::kFullCell},
    {"gauss-only", LimiterMode::kGaussOnly},
};

std::string method_name(TimeMethod m) {
  for (const auto& [name, value] : kMethods)
    if (value == m) return name;
  return "?";
}

std::string mode_name(LimiterMode m) {
  for (const auto& [name, value] : kLimiterModes)
    if (value == m) return name;
  return "?";
}

// Shared run/eoc knobs, wired onto a subcommand.
struct RunFlags {
  std::string case_id;
  SolverOptions opts;
  bool no_limiter = false;

  void attach(CLI::App& cmd) {
    cmd.add_option("--case", case_id, "benchmark case id (see `pbedg cases`)")->required();
    cmd.add_option("--cells", opts.cells, "number of geometric cells")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd.add_option("--degree", opts.degree, "polynomial degree per cell")
        ->check(CLI::Range(0, 6))
        ->capture_default_str();
    cmd.add_option("--quad", opts.quad_points,
                   "Gauss points per cell (default: degree + 1)");
    cmd.add_option("--span", opts.span_exponent,
                   "domain span: the mesh covers x_min * 2^span in doublings")
        ->capture_default_str();
    cmd.add_option("--t-end", opts.time.t_end, "end time")->required();
    cmd.add_option("--dt", opts.time.dt_initial, "initial time step");
    cmd.add_flag("--cfl", opts.time.use_cfl_bound,
                 "derive each step from the positivity bound instead of --dt");
    cmd.add_option("--cfl-safety", opts.time.cfl_safety,
                   "fraction of the positivity bound to use with --cfl")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd.add_option("--method", opts.time.method, "time integrator")
        ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case))
        ->default_str("euler");
    cmd.add_flag("--no-limiter", no_limiter, "disable the scaling limiter");
    cmd.add_option("--limiter-mode", opts.time.limiter_mode,
                   "where nonnegativity is enforced")
        ->transform(CLI::CheckedTransformer(kLimiterModes, CLI::ignore_case))
        ->default_str("full-cell");
    cmd.add_option("--max-halvings", opts.time.max_halvings,
                   "step-halving budget per attempted step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }

  SolverOptions resolved() const {
    SolverOptions o = opts;
    o.time.limiter_enabled = !no_limiter;
    if (!o.time.use_cfl_bound && o.time.dt_initial <= 0.0) {
      throw ConfigError("--dt", "required unless --cfl is given");
    }
    return o;
  }
};

json options_json(const CaseRun& run) {
  const SolverOptions& o = run.options;
  return json{{"cells", o.cells},
              {"degree", o.degree},
              {"quad_points", o.quad_points},
              {"span_exponent", o.span_exponent},
              {"t_end", o.time.t_end},
              {"dt_initial", o.time.dt_initial},
              {"method", method_name(o.time.method)},
              {"use_cfl_bound", o.time.use_cfl_bound},
              {"cfl_safety", o.time.cfl_safety},
              {"limiter_enabled", o.time.limiter_enabled},
              {"limiter_mode", mode_name(o.time.limiter_mode)},
              {"max_halvings", o.time.max_halvings}};
}

json trace_json(const RunTrace& t) {
  json halvings = json::array();
  for (const auto& h : t.halvings)
    halvings.push_back({{"time", h.time}, {"dt_before", h.dt_before}});
  const double defect =
      std::fabs(t.initial_mass - t.final_mass - t.boundary_outflux) / t.initial_mass;
  return json{{"steps", t.steps},
              {"halvings", halvings},
              {"initial_mass", t.initial_mass},
              {"final_mass", t.final_mass},
              {"boundary_outflux", t.boundary_outflux},
              {"mass_ledger_defect_rel", defect},
              {"limiter_touched_total", t.limiter_touched_total},
              {"min_theta", t.min_theta},
              {"wall_seconds", t.wall_seconds}};
}

json state_json(const DGState& state, const Mesh& mesh) {
  json interfaces = json::array(), rows = json::array();
  for (int i = 0; i <= mesh.cells(); ++i) interfaces.push_back(mesh.interface(i));
  for (int j = 0; j < state.cells(); ++j) {
    json row = json::array();
    for (int i = 0; i <= state.degree; ++i) row.push_back(state.coeffs(j, i));
    rows.push_back(std::move(row));
  }
  return json{{"time", state.time},
              {"cells", state.cells()},
              {"degree", state.degree},
              {"basis", "legendre, reference cell [-1, 1]"},
              {"interfaces", interfaces},
              {"coefficients", rows}};
}

json moments_json(const CaseRun& run) {
  json out = json::array();
  for (const MomentSample& row : moment_series(run)) {
    out.push_back({{"time", row.time}, {"m", row.values}});
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream stream(path);
  if (!stream) throw ConfigError("--out", "cannot write " + path.string());
  stream << content;
}

// Density samples of the final state: 9 points per cell plus both edges.
std::string state_csv(const DGState& state, const Mesh& mesh) {
  std::string out = "x,n\n";
  char line[64];
  for (int j = 0; j < state.cells(); ++j) {
    for (int s = 0; s <= 8; ++s) {
      const double xi = -1.0 + 0.25 * s;
      const double x =
          mesh.interface(j) + 0.5 * (xi + 1.0) * mesh.width(j);
      std::snprintf(line, sizeof line, "%.16e,%.16e\n", x, eval_state_ref(state, j, xi));
      out += line;
    }
  }
  return out;
}

int cmd_cases() {
  std::printf("%-17s %-7s %s\n", "id", "exact", "description");
  for (const auto& id : case_ids()) {
    const BenchmarkCase bc = make_case(id);
    std::string window = "-";
    if (bc.has_solution())
      window = bc.t_max >= 1e300 ? "t>=0" : "t<=" + std::to_string(bc.t_max).substr(0, 4);
    std::printf("%-17s %-7s %s\n", bc.id.c_str(), window.c_str(), bc.description.c_str());
  }
  return 0;
}

int cmd_run(const RunFlags& flags, const std::string& out_dir,
            const std::vector<double>& output_times) {
  SolverOptions opts = flags.resolved();
  opts.time.output_times = output_times;
  const BenchmarkCase bc = make_case(flags.case_id);
  const CaseRun run = run_case(bc, opts);

  const auto series = moment_series(run);
  const double extent =
      aggregation_extent(series.back().values[0], series.front().values[0]);
  std::printf("%s: %d cells, degree %d, %s to t = %g\n", bc.id.c_str(), opts.cells,
              opts.degree, method_name(opts.time.method).c_str(), opts.time.t_end);
  std::printf("  %ld steps (%zu halvings), wall %.2f s\n", run.trace.steps,
              run.trace.halvings.size(), run.trace.wall_seconds);
  std::printf("  mass %.6e -> %.6e, boundary outflux %.3e\n", run.trace.initial_mass,
              run.trace.final_mass, run.trace.boundary_outflux);
  std::printf("  M0 %.6e -> %.6e (aggregation extent %.1f%%)\n",
              series.front().values[0], series.back().values[0], 100.0 * extent);
  if (std::isfinite(run.err_continuous)) {
    std::printf("  error vs closed form: continuous %.3e, discrete %.3e\n",
                run.err_continuous, run.err_discrete);
  }

  if (!out_dir.empty()) {
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    json report{{"case", run.case_id},
                {"description", bc.description},
                {"options", options_json(run)},
                {"trace", trace_json(run.trace)},
                {"moments", moments_json(run)},
                {"aggregation_extent", extent},
                {"final_state", state_json(run.state, run.mesh)}};
    if (std::isfinite(run.err_continuous)) {
      report["errors"] = {{"continuous", run.err_continuous},
                          {"discrete", run.err_discrete}};
    }
    write_file(dir / "runreport.json", report.dump(2) + "\n");
    write_file(dir / "solution.csv", state_csv(run.state, run.mesh));
    std::printf("  wrote %s and %s\n", (dir / "runreport.json").c_str(),
                (dir / "solution.csv").c_str());
  }
  return 0;
}

int cmd_eoc(const RunFlags& flags, int levels, const std::string& out_dir) {
  const SolverOptions base = flags.resolved();
  const BenchmarkCase bc = make_case(flags.case_id);
  std::vector<int> cells_list{base.cells};
  for (int l = 1; l < levels; ++l) cells_list.push_back(2 * cells_list.back());

  const EocResult result = eoc_battery(bc, cells_list, base);
  if (result.self_convergence) {
    std::printf("(no closed form at t = %g: errors are against the doubled mesh)\n",
                base.time.t_end);
  }
  std::printf("%s", render_markdown(result.continuous).c_str());
  if (!result.discrete.rows.empty()) {
    std::printf("\n%s", render_markdown(result.discrete).c_str());
  }

  if (!out_dir.empty()) {
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / "eoc_continuous.csv", render_csv(result.continuous));
    if (!result.discrete.rows.empty())
      write_file(dir / "eoc_discrete.csv", render_csv(result.discrete));
    std::printf("wrote CSV tables to %s\n", dir.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positivity-preserving DG solver for coagulation-fragmentation "
               "population balance equations"};
  app.require_subcommand(1);

  app.add_subcommand("cases", "list the benchmark catalog");

  CLI::App* run = app.add_subcommand("run", "run one benchmark case");
  RunFlags run_flags;
  run_flags.attach(*run);
  std::string run_out;
  std::vector<double> output_times;
  run->add_option("--out", run_out, "directory for runreport.json and solution.csv");
  run->add_option("--output-times", output_times,
                  "times at which to record moment rows")
      ->delimiter(',');

  CLI::App* eoc = app.add_subcommand("eoc", "convergence study over doubling meshes");
  RunFlags eoc_flags;
  eoc_flags.attach(*eoc);
  int levels = 4;
  std::string eoc_out;
  eoc->add_option("--levels", levels, "number of mesh doublings, starting at --cells")
      ->check(CLI::Range(2, 8))
      ->capture_default_str();
  eoc->add_option("--out", eoc_out, "directory for CSV tables");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("cases")) return cmd_cases();
    if (app.got_subcommand("run")) return cmd_run(run_flags, run_out, output_times);
    if (app.got_subcommand("eoc")) return cmd_eoc(eoc_flags, levels, eoc_out);
  } catch (const NonConvergence& e) {
    std::fprintf(stderr, "error: %s (t = %g, dt = %g after %d halvings)\n", e.what(),
                 e.time, e.dt, e.halvings);
    return 1;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
