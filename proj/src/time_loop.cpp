#include "pbedg/time_loop.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "pbedg/errors.hpp"

namespace pbedg {

std::vector<std::vector<double>> ssp_stage_weights(TimeMethod method) {
  switch (method) {
    case TimeMethod::kEuler:
      return {{1.0}};
    case TimeMethod::kSspRk2:
      return {{1.0}, {0.5, 0.5}};
    case TimeMethod::kSspRk3:
      return {{1.0}, {0.75, 0.25}, {1.0 / 3.0, 2.0 / 3.0}};
  }
  throw InvalidArgument("unknown time method");
}

DGState initialize(const std::function<double(double)>& n0, const Mesh& mesh, int degree,
                   const QuadratureRule& rule, bool limiter_enabled, LimiterMode limiter_mode,
                   int projection_order, double zero_average_floor) {
  DGState state = project_initial(n0, mesh, degree, projection_order);
  bool any_positive = false;
  for (int j = 0; j < mesh.cells(); ++j) {
    const double avg = state.cell_average(j);
    if (avg < 0.0) {
      throw UnresolvableInitialData("initial data has a negative average in cell " +
                                    std::to_string(j) + "; the data must be nonnegative");
    }
    if (avg > 0.0) any_positive = true;
  }
  if (!any_positive) {
    throw UnresolvableInitialData("initial data vanishes on every cell of the mesh");
  }
  for (int j = 0; j < mesh.cells(); ++j) {
    if (state.cell_average(j) > 0.0) continue;
    if (zero_average_floor > 0.0) {
      // Far-tail cells where the data underflows to exactly zero: replace by a
      // tiny constant so the positivity argument applies from the first step.
      for (int i = 0; i <= degree; ++i) state.coeffs(j, i) = 0.0;
      state.coeffs(j, 0) = zero_average_floor;
    } else {
      throw UnresolvableInitialData("initial data has zero average in cell " +
                                    std::to_string(j) +
                                    " and zero-average flooring is disabled");
    }
  }
  if (limiter_enabled) state = limit_state(state, mesh, rule, limiter_mode).first;
  return state;
}

namespace {

struct StageAttempt {
  DGState state;
  double outflux;  // stage-weighted dt * right-boundary flux for this step
  long touched;
  double min_theta;
};

// Full multi-stage step of size dt from u0. rhs0 is the assembly at u0,
// computed once per step and valid for every retry since halving only
// changes dt. Returns nullopt when any stage produces a nonpositive or
// non-finite cell average, or diverges during assembly.
std::optional<StageAttempt> attempt_step(const DGState& u0, const RhsEvaluation& rhs0, double dt,
                                         const Mesh& mesh, const QuadratureRule& rule,
                                         const KernelSet& kernels, const BreakageTables& tables,
                                         const RunConfig& config,
                                         const std::vector<std::vector<double>>& weights) {
  const int n = mesh.cells();
  DGState cur = u0;
  double cur_out = 0.0;
  long touched = 0;
  double min_theta = 1.0;
  for (size_t s = 0; s < weights.size(); ++s) {
    RhsEvaluation local;
    const RhsEvaluation* rhs = &rhs0;
    if (s > 0) {
      try {
        local = assemble_rhs(cur, mesh, rule, kernels, tables);
      } catch (const DivergedState&) {
        return std::nullopt;
      }
      rhs = &local;
    }
    DGState next = euler_update(cur, *rhs, dt);
    double next_out = cur_out + dt * rhs->interface_fluxes[n];
    if (s > 0) {
      const double w0 = weights[s][0], we = weights[s][1];
      auto& nd = next.coeffs.data();
      const auto& od = u0.coeffs.data();
      for (size_t m = 0; m < nd.size(); ++m) nd[m] = w0 * od[m] + we * nd[m];
      next_out *= we;  // the u0 part carries no outflux within this step
    }
    for (int j = 0; j < n; ++j) {
      const double avg = next.cell_average(j);
      if (!(avg > 0.0) || !std::isfinite(avg)) return std::nullopt;
    }
    if (config.limiter_enabled) {
      auto [limited, report] = limit_state(next, mesh, rule, config.limiter_mode);
      touched += report.touched;
      min_theta = std::min(min_theta, report.min_theta);
      next = std::move(limited);
    }
    cur = std::move(next);
    cur_out = next_out;
  }
  cur.time = u0.time + dt;
  return StageAttempt{std::move(cur), cur_out, touched, min_theta};
}

double stop_tolerance(double t) { return 1e-12 * std::max(1.0, std::abs(t)); }

}  // namespace

std::pair<DGState, RunTrace> advance(const DGState& state0, const Mesh& mesh,
                                     const QuadratureRule& rule, const KernelSet& kernels,
                                     const BreakageTables& tables, const RunConfig& config) {
  if (!(config.t_end > state0.time)) {
    throw InvalidArgument("advance: t_end must exceed the current state time");
  }
  if (!(config.dt_initial > 0.0)) {
    throw InvalidArgument("advance: dt_initial must be positive");
  }
  if (!(config.cfl_safety > 0.0) || config.cfl_safety > 1.0) {
    throw InvalidArgument("advance: cfl_safety must lie in (0, 1]");
  }
  if (config.max_halvings < 0) {
    throw InvalidArgument("advance: max_halvings must be nonnegative");
  }
  const auto weights = ssp_stage_weights(config.method);
  const auto wall_start = std::chrono::steady_clock::now();

  // Strictly increasing stop times in (t_start, t_end], ending at t_end.
  std::vector<double> stops = config.output_times;
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
  for (double t : stops) {
    if (t <= state0.time + stop_tolerance(state0.time) ||
        t > config.t_end + stop_tolerance(config.t_end)) {
      throw InvalidArgument("advance: output times must lie in (t_start, t_end]");
    }
  }
  if (!stops.empty() && std::abs(stops.back() - config.t_end) <= stop_tolerance(config.t_end)) {
    stops.back() = config.t_end;
  } else {
    stops.push_back(config.t_end);
  }
  const bool emit_final =
      std::any_of(config.output_times.begin(), config.output_times.end(), [&](double t) {
        return std::abs(t - config.t_end) <= stop_tolerance(config.t_end);
      });

  RunTrace trace;
  trace.initial_mass = total_mass(state0, mesh);
  DGState state = state0;
  double base_dt = config.dt_initial;
  int clean_streak = 0;
  size_t next_stop = 0;

  while (state.time < config.t_end - stop_tolerance(config.t_end)) {
    RhsEvaluation rhs0 = assemble_rhs(state, mesh, rule, kernels, tables);

    double dt = std::min(base_dt, stops[next_stop] - state.time);
    if (config.use_cfl_bound) {
      dt = std::min(dt, config.cfl_safety * cfl_max_dt_from_sweep(state, mesh, tables, rhs0.parts));
    }

    int halvings = 0;
    for (;;) {
      auto attempt = attempt_step(state, rhs0, dt, mesh, rule, kernels, tables, config, weights);
      if (attempt) {
        state = std::move(attempt->state);
        trace.boundary_outflux += attempt->outflux;
        trace.limiter_touched_total += attempt->touched;
        trace.min_theta = std::min(trace.min_theta, attempt->min_theta);
        break;
      }
      trace.halvings.push_back({state.time, dt});
      ++halvings;
      if (halvings > config.max_halvings) {
        throw NonConvergence("time step halving did not restore positive averages", state.time,
                             dt, halvings);
      }
      dt *= 0.5;
    }
    ++trace.steps;

    if (halvings > 0) {
      base_dt = std::min(base_dt, dt);  // keep the step size that worked
      clean_streak = 0;
    } else if (config.dt_regrow && ++clean_streak >= config.regrow_after) {
      base_dt *= 2.0;
      clean_streak = 0;
    }

    if (state.time >= stops[next_stop] - stop_tolerance(stops[next_stop])) {
      state.time = stops[next_stop];
      const bool is_final = next_stop + 1 == stops.size();
      if (!is_final || emit_final) {
        trace.outputs.push_back({state.time, state, total_mass(state, mesh)});
      }
      ++next_stop;
    }
  }
  state.time = config.t_end;
  trace.final_mass = total_mass(state, mesh);
  trace.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  return {std::move(state), trace};
}

}  // namespace pbedg
