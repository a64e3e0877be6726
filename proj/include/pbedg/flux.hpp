#pragma once

#include <vector>

#include "pbedg/array2d.hpp"
#include "pbedg/basis.hpp"
#include "pbedg/kernels.hpp"
#include "pbedg/mesh.hpp"
#include "pbedg/quadrature.hpp"

namespace pbedg {

// Gauss abscissae of every cell: out(j, a) = x_j^a.
Array2D gauss_point_matrix(const Mesh& mesh, const QuadratureRule& rule);

// Precomputed breakage mass-flux integrals. The kernel part of the breakage
// flux does not involve the solution, so everything is assembled once per
// (mesh, rule, kernel) and reused each step.
//
// interface_prefix(i, l*Q + a) = G_{i,l}^a
//    = sum_{c < i} (h_c / 2) sum_b w_b B(x_c^b, x_l^a),
// the i-cell prefix of int_0^{x_i} B(u, v) du at the abscissa v = x_l^a;
// nondecreasing in i. Interior-point variants (prefix up to an interior
// Gauss point, partial first and last cells) are cached per (j, gamma).
struct BreakageTables {
  int cells = 0;
  int order = 0;
  Array2D interface_prefix;                 // (N+1) x (N*Q)
  std::vector<double> interior_values;      // ragged: per (j, gamma), (N-j)*Q entries
  std::vector<size_t> interior_offset;      // N*Q + 1 offsets into interior_values
  std::vector<double> interior_outer_pts;   // N*Q*Q: abscissae of [x_j^gamma, X_{j+1}]
  std::vector<double> interior_outer_half;  // N*Q half-widths of those segments

  bool empty() const { return cells == 0; }
  double prefix(int i, int l, int a) const { return interface_prefix(i, l * order + a); }
};

// Builds the tables; returns an empty table set for kernels without breakage.
BreakageTables build_breakage_tables(const Mesh& mesh, const QuadratureRule& rule,
                                     const KernelSet& kernels);

// Every flux the scheme needs for one right-hand side, plus the birth/death
// split that feeds the time-step bound:
//   birth_agg[j]  = B_{a,j} (mass entering cell j by aggregation)
//   death_agg(j,a) = Gamma_{j,j}^a (outflow coefficient at the j-th cell's
//                    own abscissae).
struct FluxSweep {
  std::vector<double> agg_interface;  // N+1
  std::vector<double> brk_interface;  // N+1, each <= 0; index N is always 0
  Array2D agg_interior;               // N x Q
  Array2D brk_interior;               // N x Q
  std::vector<double> birth_agg;      // N
  Array2D death_agg;                  // N x Q

  double interface_total(int i) const { return agg_interface[i] + brk_interface[i]; }
  double interior_total(int j, int a) const { return agg_interior(j, a) + brk_interior(j, a); }
};

// One full assembly sweep. Interface aggregation fluxes cost O(N^2 Q^2)
// kernel evaluations via per-abscissa suffix sums; the interior-point fluxes
// add an O(N^2 Q^3) term from the partial outer segments.
FluxSweep flux_sweep(const DGState& state, const Mesh& mesh, const QuadratureRule& rule,
                     const KernelSet& kernels, const BreakageTables& tables);

// Aggregation mass flux across interface i (0..N):
//   F_a = sum_{l < i} (h_l/2) sum_a w_a n_h(x_l^a) Gamma_{i,l}^a,
//   Gamma_{i,l}^a ~ int_{x_i - x_l^a}^{L} A(x_l^a, v) n_h(v) dv.
// Direct evaluation, used by tests and single-point queries.
double interface_flux_agg(const DGState& state, const Mesh& mesh, const QuadratureRule& rule,
                          const KernelSet& kernels, int i);

// Breakage mass flux across interface i (<= 0); index N gives exactly 0.
double interface_flux_brk(const DGState& state, const BreakageTables& tables, const Mesh& mesh,
                          const QuadratureRule& rule, int i);

// Total mass flux at the interior point x* = x_j^gamma, with the partial
// outer cells handled like the interface formulas handle partial inner cells.
double interior_flux(const DGState& state, const Mesh& mesh, const QuadratureRule& rule,
                     const KernelSet& kernels, int j, int gauss_index);

// Same at an arbitrary x* inside cell j (x* in (X_j, X_{j+1}]).
double interior_flux_at(const DGState& state, const Mesh& mesh, const QuadratureRule& rule,
                        const KernelSet& kernels, int j, double xstar);

// Cell-j split of the aggregation flux difference
//   F_{j+1/2} - F_{j-1/2} = -B_{a,j} + (h_j/2) sum_a w_a n_h(x_j^a) Gamma_{j,j}^a
// together with the breakage death coefficients G_{j-1,j}^a; every part is
// nonnegative for nonnegative states.
struct FluxDecomposition {
  double birth_agg = 0.0;          // B_{a,j}
  std::vector<double> death_agg;   // Gamma_{j,j}^a, one per abscissa
  std::vector<double> death_brk;   // G_{j-1,j}^a, one per abscissa
};

FluxDecomposition flux_difference_decomposition(const DGState& state, const Mesh& mesh,
                                                const QuadratureRule& rule,
                                                const KernelSet& kernels,
                                                const BreakageTables& tables, int j);

}  // namespace pbedg
