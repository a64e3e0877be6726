#include "pbedg/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

#include "pbedg/errors.hpp"

namespace pbedg {

double error_continuous(const DGState& state, const Mesh& mesh,
                        const std::function<double(double)>& reference, int order) {
  return error_discrete(state, mesh, QuadratureRule::gauss(order), reference);
}

double error_discrete(const DGState& state, const Mesh& mesh, const QuadratureRule& rule,
                      const std::function<double(double)>& reference) {
  double acc = 0.0;
  for (int j = 0; j < mesh.cells(); ++j) {
    const double mid = mesh.midpoint(j), half = 0.5 * mesh.width(j);
    double cell = 0.0;
    for (int a = 0; a < rule.order(); ++a) {
      const double x = mid + half * rule.node(a);
      cell += rule.weight(a) * std::abs(eval_state_ref(state, j, rule.node(a)) - reference(x));
    }
    acc += half * cell;
  }
  return acc;
}

double eoc(double error_coarse, double error_fine) {
  if (!(error_coarse > 0.0) || !(error_fine > 0.0)) {
    throw InvalidArgument("eoc: both errors must be positive");
  }
  return std::log2(error_coarse / error_fine);
}

double self_error(const DGState& coarse_state, const Mesh& coarse_mesh,
                  const DGState& fine_state, const Mesh& fine_mesh, int order) {
  const QuadratureRule rule = QuadratureRule::gauss(order);
  double acc = 0.0;
  for (int j = 0; j < coarse_mesh.cells(); ++j) {
    const double mid = coarse_mesh.midpoint(j), half = 0.5 * coarse_mesh.width(j);
    double cell = 0.0;
    for (int a = 0; a < rule.order(); ++a) {
      const double x = mid + half * rule.node(a);
      const double coarse = eval_state_ref(coarse_state, j, rule.node(a));
      cell += rule.weight(a) * std::abs(coarse - eval_state(fine_state, fine_mesh, x));
    }
    acc += half * cell;
  }
  return acc;
}

std::vector<double> moments(const DGState& state, const Mesh& mesh, int max_order, int order) {
  const QuadratureRule rule = QuadratureRule::gauss(order);
  std::vector<double> out(static_cast<size_t>(max_order) + 1, 0.0);
  for (int j = 0; j < mesh.cells(); ++j) {
    const double mid = mesh.midpoint(j), half = 0.5 * mesh.width(j);
    for (int a = 0; a < rule.order(); ++a) {
      const double x = mid + half * rule.node(a);
      const double wn = half * rule.weight(a) * eval_state_ref(state, j, rule.node(a));
      // M_p accumulates x^{p-1} n; start at x^{-1} for the number moment.
      double xp = 1.0 / x;
      for (int p = 0; p <= max_order; ++p) {
        out[p] += wn * xp;
        xp *= x;
      }
    }
  }
  return out;
}

namespace {

double flux_from_density(const KernelSet& kernels,
                         const std::function<double(double, double)>& n, double x, double t,
                         double cap) {
  double total = 0.0;
  if (kernels.has_aggregation) {
    auto outer = [&](double u) {
      const double nu = n(u, t);
      if (nu == 0.0) return 0.0;
      auto inner = [&](double v) { return kernels.K(u, v) / v * n(v, t); };
      return nu * adaptive_integrate(inner, x - u, cap, 1e-9, 1e-14);
    };
    total += adaptive_integrate(outer, 0.0, x, 1e-9, 1e-14);
  }
  if (kernels.has_breakage) {
    auto outer = [&](double v) {
      const double nv = n(v, t);
      if (nv == 0.0) return 0.0;
      auto inner = [&](double u) { return kernels.B(u, v); };
      return nv * adaptive_integrate(inner, 0.0, x, 1e-9, 1e-14);
    };
    total -= adaptive_integrate(outer, x, cap, 1e-9, 1e-14);
  }
  return total;
}

template <typename F>
double central5(F&& f, double center, double h) {
  return (-f(center + 2.0 * h) + 8.0 * f(center + h) - 8.0 * f(center - h) + f(center - 2.0 * h)) /
         (12.0 * h);
}

}  // namespace

double pde_residual(const KernelSet& kernels, const std::function<double(double, double)>& n,
                    double x, double t, double domain_cap) {
  const double ht = 1e-4 * std::max(1.0, std::abs(t));
  const double hx = 1e-4 * std::max(1.0, std::abs(x));
  if (t - 2.0 * ht <= 0.0) throw InvalidArgument("pde_residual: t too close to 0 for the stencil");
  if (x - 2.0 * hx <= 0.0) throw InvalidArgument("pde_residual: x too close to 0 for the stencil");
  const double dn_dt = central5([&](double tt) { return n(x, tt); }, t, ht);
  const double df_dx = central5(
      [&](double xx) { return flux_from_density(kernels, n, xx, t, domain_cap); }, x, hx);
  return dn_dt + df_dx;
}

ConvergenceTable make_convergence_table(std::string label, const std::vector<int>& cells,
                                        const std::vector<double>& errors) {
  if (cells.size() != errors.size()) {
    throw InvalidArgument("make_convergence_table: cells and errors must pair up");
  }
  ConvergenceTable table;
  table.label = std::move(label);
  for (size_t i = 0; i < cells.size(); ++i) {
    const double rate =
        i == 0 ? std::numeric_limits<double>::quiet_NaN() : eoc(errors[i - 1], errors[i]);
    table.rows.push_back({cells[i], errors[i], rate});
  }
  return table;
}

std::string render_markdown(const ConvergenceTable& table) {
  std::string out;
  out += "### " + table.label + "\n\n";
  out += "| N | error | EOC |\n|---:|---:|---:|\n";
  char buf[96];
  for (const auto& row : table.rows) {
    if (std::isnan(row.eoc)) {
      std::snprintf(buf, sizeof buf, "| %d | %.6e | - |\n", row.cells, row.error);
    } else {
      std::snprintf(buf, sizeof buf, "| %d | %.6e | %.3f |\n", row.cells, row.error, row.eoc);
    }
    out += buf;
  }
  return out;
}

std::string render_csv(const ConvergenceTable& table) {
  std::string out = "cells,error,eoc\r\n";
  char buf[96];
  for (const auto& row : table.rows) {
    if (std::isnan(row.eoc)) {
      std::snprintf(buf, sizeof buf, "%d,%.16e,\r\n", row.cells, row.error);
    } else {
      std::snprintf(buf, sizeof buf, "%d,%.16e,%.16e\r\n", row.cells, row.error, row.eoc);
    }
    out += buf;
  }
  return out;
}

}  // namespace pbedg
