#include <cmath>

#include "doctest.h"
#include "pbedg/errors.hpp"
#include "pbedg/time_loop.hpp"

using namespace pbedg;

namespace {

// Two uniform cells with binary breakage and the midpoint rule: the only
// death coefficient is 2/3, so forward Euler needs dt < 3/2.
struct BreakagePair {
  Mesh mesh = Mesh::from_interfaces({0.0, 1.0, 2.0});
  QuadratureRule rule = QuadratureRule::gauss(1);
  KernelSet kernels = KernelSet::builtin("binlin_brk");
  BreakageTables tables = build_breakage_tables(mesh, rule, kernels);
  DGState ones;

  BreakagePair() : ones(2, 0) {
    ones.coeffs(0, 0) = 1.0;
    ones.coeffs(1, 0) = 1.0;
  }
};

KernelSet inert_kernels() {
  KernelSet k;
  k.name = "inert";
  return k;
}

}  // namespace

TEST_CASE("stage weights are convex rows of the expected shapes") {
  const auto euler = ssp_stage_weights(TimeMethod::kEuler);
  REQUIRE(euler.size() == 1);
  CHECK(euler[0] == std::vector<double>{1.0});

  const auto rk2 = ssp_stage_weights(TimeMethod::kSspRk2);
  REQUIRE(rk2.size() == 2);
  CHECK(rk2[1] == std::vector<double>{0.5, 0.5});

  const auto rk3 = ssp_stage_weights(TimeMethod::kSspRk3);
  REQUIRE(rk3.size() == 3);
  CHECK(rk3[1][0] == 0.75);
  CHECK(rk3[1][1] == 0.25);
  CHECK(rk3[2][0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(rk3[2][1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  for (const auto& method : {euler, rk2, rk3}) {
    for (const auto& row : method) {
      double sum = 0.0;
      for (double w : row) {
        CHECK(w >= 0.0);
        sum += w;
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
    }
  }
}

TEST_CASE("constant data projects to constant coefficients") {
  const Mesh mesh = Mesh::geometric(10, 1e-2, 10.0);
  const auto rule = QuadratureRule::gauss(2);
  const DGState state = initialize([](double) { return 1.0; }, mesh, 1, rule);
  for (int j = 0; j < mesh.cells(); ++j) {
    CHECK(state.coeffs(j, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(state.coeffs(j, 1) == doctest::Approx(0.0).epsilon(1e-14).scale(1.0));
  }
}

TEST_CASE("underflowed tail cells are floored to a tiny positive average") {
  const Mesh mesh = Mesh::geometric(30, 1e-3, 30.0);
  const auto rule = QuadratureRule::gauss(3);
  auto n0 = [](double x) { return x * std::exp(-x); };

  const DGState state = initialize(n0, mesh, 2, rule);
  double lowest = 1e300;
  for (int j = 0; j < mesh.cells(); ++j) {
    CHECK(state.cell_average(j) > 0.0);
    lowest = std::min(lowest, state.cell_average(j));
  }
  // The far tail underflows in projection and lands exactly on the floor.
  CHECK(lowest == kDefaultZeroAverageFloor);

  CHECK_THROWS_AS(initialize(n0, mesh, 2, rule, true, LimiterMode::kGaussOnly, 16, 0.0),
                  UnresolvableInitialData);
}

TEST_CASE("data without positive mass is rejected up front") {
  const Mesh mesh = Mesh::from_interfaces({0.0, 1.0, 2.0});
  const auto rule = QuadratureRule::gauss(2);
  CHECK_THROWS_AS(initialize([](double) { return 0.0; }, mesh, 1, rule),
                  UnresolvableInitialData);
  // Negative average in the upper cell: int_1^2 (1 - x) dx = -1/2.
  CHECK_THROWS_AS(initialize([](double x) { return 1.0 - x; }, mesh, 1, rule),
                  UnresolvableInitialData);
}

TEST_CASE("an oversized step is halved until the averages stay positive") {
  BreakagePair p;
  RunConfig config;
  config.t_end = 8.0;  // well past dt so the oversized step is really attempted
  config.dt_initial = 6.4;

  auto [state, trace] = advance(p.ones, p.mesh, p.rule, p.kernels, p.tables, config);
  CHECK(state.time == 8.0);
  // dt = 6.4, 3.2 and 1.6 all drive cell 1 negative; 0.8 works.
  REQUIRE(trace.halvings.size() == 3);
  CHECK(trace.halvings[0].dt_before == 6.4);
  CHECK(trace.halvings[1].dt_before == 3.2);
  CHECK(trace.halvings[2].dt_before == 1.6);
  CHECK(trace.steps == 10);  // the working 0.8 step is kept for the rest
  for (int j = 0; j < 2; ++j) CHECK(state.cell_average(j) > 0.0);
  // Pure breakage moves mass down, never out.
  CHECK(trace.boundary_outflux == 0.0);
  CHECK(trace.final_mass == doctest::Approx(trace.initial_mass).epsilon(1e-13));
}

TEST_CASE("exhausting the halving budget raises a diagnosable error") {
  BreakagePair p;
  RunConfig config;
  config.t_end = 8.0;
  config.dt_initial = 6.4;
  config.max_halvings = 0;

  CHECK_THROWS_AS(advance(p.ones, p.mesh, p.rule, p.kernels, p.tables, config), NonConvergence);
  try {
    advance(p.ones, p.mesh, p.rule, p.kernels, p.tables, config);
  } catch (const NonConvergence& e) {
    CHECK(e.time == 0.0);
    CHECK(e.dt == 6.4);
    CHECK(e.halvings == 1);
  }
}

TEST_CASE("the step bound keeps the run halving-free") {
  BreakagePair p;
  RunConfig config;
  config.t_end = 5.0;
  config.dt_initial = 1e9;
  config.use_cfl_bound = true;

  auto [state, trace] = advance(p.ones, p.mesh, p.rule, p.kernels, p.tables, config);
  CHECK(state.time == 5.0);
  CHECK(trace.halvings.empty());
  // dt locks to 0.99 * 3/2 until the final clip: 4 steps to reach t = 5.
  CHECK(trace.steps == 4);
  for (int j = 0; j < 2; ++j) CHECK(state.cell_average(j) > 0.0);
}

TEST_CASE("runs land exactly on the requested output times") {
  const Mesh mesh = Mesh::geometric(5, 1e-2, 5.0);
  const auto rule = QuadratureRule::gauss(2);
  const KernelSet kernels = inert_kernels();
  const auto tables = build_breakage_tables(mesh, rule, kernels);
  DGState state(5, 0);
  for (int j = 0; j < 5; ++j) state.coeffs(j, 0) = 1.0;

  RunConfig config;
  config.t_end = 1.0;
  config.dt_initial = 0.2;
  config.output_times = {0.7, 0.3};  // order must not matter

  auto [out, trace] = advance(state, mesh, rule, kernels, tables, config);
  REQUIRE(trace.outputs.size() == 2);
  CHECK(trace.outputs[0].time == 0.3);
  CHECK(trace.outputs[1].time == 0.7);
  CHECK(trace.outputs[0].state.time == 0.3);
  CHECK(trace.outputs[0].mass == doctest::Approx(trace.initial_mass).epsilon(1e-13));
  CHECK(out.time == 1.0);

  // Asking for t_end itself adds the final sample.
  config.output_times = {0.5, 1.0};
  auto [out2, trace2] = advance(state, mesh, rule, kernels, tables, config);
  REQUIRE(trace2.outputs.size() == 2);
  CHECK(trace2.outputs[1].time == 1.0);
}

TEST_CASE("bad run configurations are rejected with clear causes") {
  BreakagePair p;
  RunConfig config;

  config.t_end = 0.0;
  CHECK_THROWS_AS(advance(p.ones, p.mesh, p.rule, p.kernels, p.tables, config), InvalidArgument);

  config.t_end = 1.0;
  config.dt_initial = 0.0;
  CHECK_THROWS_AS(advance(p.ones, p.mesh, p.rule, p.kernels, p.tables, config), InvalidArgument);

  config.dt_initial = 0.1;
  config.cfl_safety = 0.0;
  CHECK_THROWS_AS(advance(p.ones, p.mesh, p.rule, p.kernels, p.tables, config), InvalidArgument);
  config.cfl_safety = 1.5;
  CHECK_THROWS_AS(advance(p.ones, p.mesh, p.rule, p.kernels, p.tables, config), InvalidArgument);

  config.cfl_safety = 0.99;
  config.max_halvings = -1;
  CHECK_THROWS_AS(advance(p.ones, p.mesh, p.rule, p.kernels, p.tables, config), InvalidArgument);

  config.max_halvings = 40;
  config.output_times = {2.0};  // beyond t_end
  CHECK_THROWS_AS(advance(p.ones, p.mesh, p.rule, p.kernels, p.tables, config), InvalidArgument);
  config.output_times = {0.0};  // not after the start
  CHECK_THROWS_AS(advance(p.ones, p.mesh, p.rule, p.kernels, p.tables, config), InvalidArgument);
}

TEST_CASE("step regrowth recovers after a conservative start") {
  const Mesh mesh = Mesh::geometric(4, 1e-2, 4.0);
  const auto rule = QuadratureRule::gauss(2);
  const KernelSet kernels = inert_kernels();
  const auto tables = build_breakage_tables(mesh, rule, kernels);
  DGState state(4, 0);
  for (int j = 0; j < 4; ++j) state.coeffs(j, 0) = 1.0;

  RunConfig config;
  config.t_end = 10.0;
  config.dt_initial = 0.25;
  config.dt_regrow = true;
  config.regrow_after = 2;

  auto [out, trace] = advance(state, mesh, rule, kernels, tables, config);
  CHECK(out.time == 10.0);
  CHECK(trace.halvings.empty());
  // Doubling every two clean steps: far fewer than the 40 fixed-step count.
  CHECK(trace.steps < 15);
}

TEST_CASE("the mass ledger closes for every stepping method") {
  const Mesh mesh = Mesh::geometric(16, 1e-3, 16.0);
  const auto rule = QuadratureRule::gauss(2);
  auto n0 = [](double x) { return x * std::exp(-x); };
  const DGState state = initialize(n0, mesh, 1, rule);

  for (const char* kernel_id : {"const_agg", "coupled"}) {
    const KernelSet kernels = KernelSet::builtin(kernel_id);
    const auto tables = build_breakage_tables(mesh, rule, kernels);
    for (const auto method : {TimeMethod::kEuler, TimeMethod::kSspRk2, TimeMethod::kSspRk3}) {
      RunConfig config;
      config.t_end = 0.05;
      config.dt_initial = 1e-3;
      config.method = method;

      auto [out, trace] = advance(state, mesh, rule, kernels, tables, config);
      CHECK(trace.steps == 50);
      const double drift =
          std::fabs(trace.initial_mass - trace.final_mass - trace.boundary_outflux);
      CHECK(drift <= 1e-12 * trace.initial_mass);
    }
  }
}
