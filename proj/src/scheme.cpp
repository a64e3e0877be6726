#include "pbedg/scheme.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "pbedg/errors.hpp"

namespace pbedg {

RhsEvaluation assemble_rhs(const DGState& state, const Mesh& mesh, const QuadratureRule& rule,
                           const KernelSet& kernels, const BreakageTables& tables) {
  const int n = mesh.cells(), q = rule.order(), k = state.degree;
  RhsEvaluation out;
  out.parts = flux_sweep(state, mesh, rule, kernels, tables);
  out.interface_fluxes.resize(n + 1);
  for (int i = 0; i <= n; ++i) out.interface_fluxes[i] = out.parts.interface_total(i);
  out.interior_fluxes = Array2D(n, q);
  for (int j = 0; j < n; ++j) {
    for (int a = 0; a < q; ++a) out.interior_fluxes(j, a) = out.parts.interior_total(j, a);
  }

  // phi_i'(s_a) for the volume term; row i = 0 is identically zero, which
  // keeps the finite-volume row exact.
  Array2D dphi(q, k + 1);
  for (int a = 0; a < q; ++a) {
    for (int i = 0; i <= k; ++i) dphi(a, i) = legendre_deriv(i, rule.node(a));
  }

  out.dcoeffs = Array2D(n, k + 1);
  for (int j = 0; j < n; ++j) {
    const double up = out.interface_fluxes[j + 1];
    const double lo = out.interface_fluxes[j];
    if (!std::isfinite(up) || !std::isfinite(lo)) {
      throw DivergedState(j, -1, "non-finite interface flux at cell " + std::to_string(j));
    }
    for (int i = 0; i <= k; ++i) {
      double vol = 0.0;
      for (int a = 0; a < q; ++a) vol += rule.weight(a) * dphi(a, i) * out.interior_fluxes(j, a);
      const double sign = (i % 2 == 0) ? 1.0 : -1.0;
      const double d = (2.0 / (mesh.width(j) * legendre_norm(i))) * (vol - up + sign * lo);
      if (!std::isfinite(d)) {
        throw DivergedState(j, i, "non-finite derivative in cell " + std::to_string(j) +
                                      ", mode " + std::to_string(i));
      }
      out.dcoeffs(j, i) = d;
    }
  }
  return out;
}

DGState euler_update(const DGState& state, const RhsEvaluation& rhs, double dt) {
  DGState out = state;
  const size_t m = out.coeffs.data().size();
  for (size_t i = 0; i < m; ++i) out.coeffs.data()[i] += dt * rhs.dcoeffs.data()[i];
  out.time = state.time + dt;
  return out;
}

double cfl_max_dt_from_sweep(const DGState& state, const Mesh& mesh,
                             const BreakageTables& tables, const FluxSweep& sweep) {
  const int n = mesh.cells();
  const int q = sweep.death_agg.cols();
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    const double avg = state.cell_average(j);
    if (!(avg > 0.0)) {
      throw InvalidState("cfl bound requires positive averages; cell " + std::to_string(j) +
                         " has " + std::to_string(avg));
    }
    const double birth = std::max(-sweep.birth_agg[j], 0.0) / (mesh.width(j) * avg);
    for (int a = 0; a < q; ++a) {
      double rate = std::max(sweep.death_agg(j, a), 0.0) + birth;
      if (!tables.empty()) rate += tables.prefix(j, j, a);
      worst = std::max(worst, rate);
    }
  }
  if (worst == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / worst;
}

double cfl_max_dt(const DGState& state, const Mesh& mesh, const QuadratureRule& rule,
                  const KernelSet& kernels, const BreakageTables& tables) {
  const FluxSweep sweep = flux_sweep(state, mesh, rule, kernels, tables);
  return cfl_max_dt_from_sweep(state, mesh, tables, sweep);
}

double cfl_breakage_bound(const BreakageTables& tables) {
  if (tables.empty()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (int j = 0; j < tables.cells; ++j) {
    for (int a = 0; a < tables.order; ++a) worst = std::max(worst, tables.prefix(j, j, a));
  }
  if (worst == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / worst;
}

}  // namespace pbedg
