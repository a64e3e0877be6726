#include <cmath>

#include "doctest.h"
#include "pbedg/analytic.hpp"
#include "pbedg/diagnostics.hpp"
#include "pbedg/errors.hpp"

using namespace pbedg;

namespace {

// n(x) = x as a degree-1 state.
DGState linear_state(const Mesh& mesh) {
  DGState state(mesh.cells(), 1);
  for (int j = 0; j < mesh.cells(); ++j) {
    state.coeffs(j, 0) = mesh.midpoint(j);
    state.coeffs(j, 1) = 0.5 * mesh.width(j);
  }
  return state;
}

}  // namespace

TEST_CASE("observed orders under doubling") {
  CHECK(eoc(4.2e-1, 2.1e-1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eoc(7.4e-2, 8.0e-3) == doctest::Approx(std::log2(9.25)).epsilon(1e-15));
  CHECK_THROWS_AS(eoc(0.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(eoc(1.0, -1.0), InvalidArgument);
}

TEST_CASE("L1 error against simple references") {
  const Mesh mesh = Mesh::from_interfaces({0.0, 1.0});
  DGState state(1, 0);
  state.coeffs(0, 0) = 2.0;

  // |2 - 1| over a unit cell.
  CHECK(error_continuous(state, mesh, [](double) { return 1.0; }) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // int_0^1 |2 - x| dx = 3/2.
  CHECK(error_continuous(state, mesh, [](double x) { return x; }) ==
        doctest::Approx(1.5).epsilon(1e-12));
  // The discrete variant of the first case: constant misfit at every node.
  CHECK(error_discrete(state, mesh, QuadratureRule::gauss(2), [](double) { return 1.0; }) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // Exact representation: both distances vanish.
  const Mesh fine = Mesh::geometric(8, 1e-2, 8.0);
  const DGState lin = linear_state(fine);
  CHECK(error_continuous(lin, fine, [](double x) { return x; }) ==
        doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
}

TEST_CASE("moments of an exactly represented linear density") {
  // n(x) = x on (0, 2]: M_p = int x^{p-1} n = 2^{p+1} / (p + 1).
  const Mesh mesh = Mesh::from_interfaces({0.0, 0.5, 1.0, 1.5, 2.0});
  const DGState state = linear_state(mesh);
  const auto m = moments(state, mesh, 5);
  REQUIRE(m.size() == 6);
  for (int p = 0; p <= 5; ++p) {
    CHECK(m[p] == doctest::Approx(std::pow(2.0, p + 1) / (p + 1)).epsilon(1e-12));
  }
}

TEST_CASE("aggregation extent is the drop in particle count") {
  CHECK(aggregation_extent(0.25, 1.0) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(aggregation_extent(1.0, 1.0) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("a run compared against itself has zero self-distance") {
  const Mesh coarse = Mesh::geometric(8, 1e-2, 8.0);
  const Mesh fine = Mesh::geometric(16, 1e-2, 8.0);
  const DGState cs = linear_state(coarse);
  const DGState fs = linear_state(fine);
  // Both represent n(x) = x exactly, so the distance vanishes even across
  // meshes; against itself it is identically zero.
  CHECK(self_error(cs, coarse, cs, coarse) == doctest::Approx(0.0).epsilon(1e-13).scale(1.0));
  CHECK(self_error(cs, coarse, fs, fine) == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
}

TEST_CASE("convergence tables render to markdown and csv") {
  const auto table = make_convergence_table("demo", {15, 30}, {4.2e-1, 2.1e-1});
  REQUIRE(table.rows.size() == 2);
  CHECK(std::isnan(table.rows[0].eoc));
  CHECK(table.rows[1].eoc == doctest::Approx(1.0).epsilon(1e-15));

  const std::string md = render_markdown(table);
  CHECK(md.find("### demo") != std::string::npos);
  CHECK(md.find("| N | error | EOC |") != std::string::npos);
  CHECK(md.find("| 15 |") != std::string::npos);
  CHECK(md.find(" - |") != std::string::npos);    // first row has no order
  CHECK(md.find("1.000 |") != std::string::npos);

  const std::string csv = render_csv(table);
  CHECK(csv.find("cells,error,eoc\r\n") == 0);
  CHECK(csv.find("1.0000000000000000e+00\r\n") != std::string::npos);
  // First data row ends with an empty eoc field.
  CHECK(csv.find("15,") != std::string::npos);
  CHECK(csv.find(",\r\n") != std::string::npos);
}

TEST_CASE("closed-form solutions satisfy the equation pointwise") {
  // Independent of the solver: fluxes rebuilt by adaptive quadrature,
  // derivatives by finite differences. The residual floor for these scales
  // sits far below the 1e-6 gate.
  const KernelSet constant = KernelSet::builtin("const_agg");
  CHECK(std::fabs(pde_residual(constant, solution_const_agg, 1.0, 0.3)) < 1e-6);
  const KernelSet binlin = KernelSet::builtin("binlin_brk");
  CHECK(std::fabs(pde_residual(binlin, solution_binlin_brk, 1.0, 0.5)) < 1e-6);
}

TEST_CASE("a wrong candidate solution leaves a visible residual") {
  const KernelSet constant = KernelSet::builtin("const_agg");
  // Freezing the correct profile at t = 0 breaks the time derivative.
  const double r = pde_residual(
      constant, [](double x, double) { return solution_const_agg(x, 0.0); }, 1.0, 0.3);
  CHECK(std::fabs(r) > 1e-3);
}
