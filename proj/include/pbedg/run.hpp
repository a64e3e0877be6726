#pragma once

#include <string>
#include <vector>

#include "pbedg/cases.hpp"
#include "pbedg/diagnostics.hpp"
#include "pbedg/time_loop.hpp"

namespace pbedg {

// Everything one solver run needs besides the case itself.
struct SolverOptions {
  int cells = 30;
  int degree = 1;
  int quad_points = 0;  // 0 resolves to degree + 1, the scheme's default
  double span_exponent = kDefaultSpanExponent;
  RunConfig time;
};

struct CaseRun {
  std::string case_id;
  SolverOptions options;  // with quad_points resolved
  Mesh mesh;
  DGState state;  // at time t_end
  RunTrace trace;
  // Distance to the closed-form solution at t_end; NaN when the case has
  // none or t_end is outside its validity window.
  double err_continuous = 0.0;
  double err_discrete = 0.0;
};

CaseRun run_case(const BenchmarkCase& bench, const SolverOptions& opts);

// Convergence study over a list of mesh sizes at fixed degree. Cases with a
// closed form are measured against it in both norms; the rest fall back to
// self-convergence (each run measured against the doubled mesh, which adds
// one reference run past the end of the list), where only the continuous
// norm is meaningful.
struct EocResult {
  bool self_convergence = false;
  ConvergenceTable continuous;
  ConvergenceTable discrete;  // empty rows in self-convergence mode
  std::vector<CaseRun> runs;
};

EocResult eoc_battery(const BenchmarkCase& bench, const std::vector<int>& cells_list,
                      const SolverOptions& base);

// Moment rows for a finished run: one row per recorded output (plus the
// final state), each holding time and M_0..M_5.
struct MomentSample {
  double time;
  std::vector<double> values;
};

std::vector<MomentSample> moment_series(const CaseRun& run);

}  // namespace pbedg
