#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pbedg/basis.hpp"
#include "pbedg/kernels.hpp"

namespace pbedg {

// L1 distance between the represented density and a reference, cell by cell
// with an independent high-order Gauss rule (default 16 points).
double error_continuous(const DGState& state, const Mesh& mesh,
                        const std::function<double(double)>& reference, int order = 16);

// Same distance sampled only at the scheme's own quadrature points; for the
// piecewise-constant scheme this is where superconvergence shows.
double error_discrete(const DGState& state, const Mesh& mesh, const QuadratureRule& rule,
                      const std::function<double(double)>& reference);

// Experimental order under mesh doubling: log2(coarse / fine).
double eoc(double error_coarse, double error_fine);

// L1 distance between two resolutions of the same run, sampled on the
// coarse mesh (whose cells are contained in the finer run's domain).
double self_error(const DGState& coarse_state, const Mesh& coarse_mesh,
                  const DGState& fine_state, const Mesh& fine_mesh, int order = 16);

// Number-density moments M_p = int x^p f dx = int x^{p-1} n dx for
// p = 0..max_order, by per-cell Gauss quadrature of the represented density.
std::vector<double> moments(const DGState& state, const Mesh& mesh, int max_order = 5,
                            int order = 16);

// Extent of aggregation 1 - M_0(t) / M_0(0).
inline double aggregation_extent(double m0_now, double m0_initial) {
  return 1.0 - m0_now / m0_initial;
}

// Residual of the mass-conservation form at one point:
//   r(x, t) = d/dt n + d/dx (F_a + F_b),
// with both fluxes rebuilt from the density n by adaptive quadrature
// (upper limits truncated at domain_cap) and both derivatives by five-point
// central differences. A correct closed-form solution drives this to the
// quadrature/stencil floor; it is the independent check the solution
// catalog is tested against.
double pde_residual(const KernelSet& kernels, const std::function<double(double, double)>& n,
                    double x, double t, double domain_cap = 200.0);

struct ConvergenceRow {
  int cells;
  double error;
  double eoc;  // NaN in the first row
};

struct ConvergenceTable {
  std::string label;
  std::vector<ConvergenceRow> rows;
};

ConvergenceTable make_convergence_table(std::string label, const std::vector<int>& cells,
                                        const std::vector<double>& errors);

std::string render_markdown(const ConvergenceTable& table);

// RFC 4180 rows "cells,error,eoc" with %.16e numbers.
std::string render_csv(const ConvergenceTable& table);

}  // namespace pbedg
