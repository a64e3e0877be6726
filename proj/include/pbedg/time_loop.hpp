#pragma once

#include <utility>
#include <vector>

#include "pbedg/limiter.hpp"
#include "pbedg/scheme.hpp"

namespace pbedg {

enum class TimeMethod { kEuler, kSspRk2, kSspRk3 };

// Convex stage combinations in Shu-Osher form. Row 0 is the weight of the
// Euler step of the current state; later rows are
//   u^(s) = w[0] u^n + w[1] (u^(s-1) + dt L(u^(s-1))).
// All weights are nonnegative and each row sums to 1, which is what lets the
// Euler positivity bound carry over to the full method.
std::vector<std::vector<double>> ssp_stage_weights(TimeMethod method);

struct RunConfig {
  double t_end = 0.0;
  double dt_initial = 0.0;
  TimeMethod method = TimeMethod::kEuler;
  bool limiter_enabled = true;
  LimiterMode limiter_mode = LimiterMode::kFullCell;
  bool use_cfl_bound = false;
  double cfl_safety = 0.99;
  int max_halvings = 40;          // per attempted step
  std::vector<double> output_times;
  bool dt_regrow = false;         // optional doubling for long moment runs
  int regrow_after = 50;          // clean steps between doublings
};

struct HalvingEvent {
  double time;
  double dt_before;
};

struct OutputSample {
  double time;
  DGState state;
  double mass;
};

struct RunTrace {
  long steps = 0;
  std::vector<HalvingEvent> halvings;
  double initial_mass = 0.0;
  double final_mass = 0.0;
  // Stage-weighted time integral of the right-boundary flux; the discrete
  // mass identity is initial_mass - final_mass = boundary_outflux to
  // round-off, with breakage contributing nothing.
  double boundary_outflux = 0.0;
  long limiter_touched_total = 0;
  double min_theta = 1.0;
  std::vector<OutputSample> outputs;
  double wall_seconds = 0.0;
};

// Flooring value for cells whose projected average underflows to exactly 0
// (far tails of exponentially decaying data on decade-spanning domains).
// A floor of 0 disables the rescue and restores the strict error.
inline constexpr double kDefaultZeroAverageFloor = 1e-300;

// Projection, zero-average handling, then one limiter pass. Throws
// UnresolvableInitialData when the data cannot yield positive averages.
// The limiter mode must match the one the subsequent run uses: a run that
// relies on whole-cell nonnegativity needs the initial state held to the
// same standard.
DGState initialize(const std::function<double(double)>& n0, const Mesh& mesh, int degree,
                   const QuadratureRule& rule, bool limiter_enabled = true,
                   LimiterMode limiter_mode = LimiterMode::kFullCell,
                   int projection_order = 16,
                   double zero_average_floor = kDefaultZeroAverageFloor);

// Explicit SSP stepping from state.time to config.t_end: each stage is an
// assemble + Euler update + convex combination, positivity-checked and
// limited; any nonpositive cell average halves dt and retries the step
// (at most max_halvings times, then NonConvergence). Steps are shortened to
// land exactly on every requested output time and on t_end.
std::pair<DGState, RunTrace> advance(const DGState& state, const Mesh& mesh,
                                     const QuadratureRule& rule, const KernelSet& kernels,
                                     const BreakageTables& tables, const RunConfig& config);

}  // namespace pbedg
