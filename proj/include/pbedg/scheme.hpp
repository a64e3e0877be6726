#pragma once

#include "pbedg/flux.hpp"

namespace pbedg {

// Weak-form right-hand side: for every cell j and mode i,
//   (h_j/2) c_i d n_j^i/dt
//     = sum_g w_g phi_i'(s_g) F(x_j^g) - [F_{j+1/2} phi_i(1) - F_{j-1/2} phi_i(-1)]
// with c_i = 2/(2i+1). The i = 0 row is exactly the finite-volume update
// h_j d n_j^0/dt = -(F_{j+1/2} - F_{j-1/2}).
struct RhsEvaluation {
  Array2D dcoeffs;                      // N x (k+1): d n_j^i / dt
  std::vector<double> interface_fluxes; // N+1 totals
  Array2D interior_fluxes;              // N x Q totals
  FluxSweep parts;                      // split fluxes, birth and death terms
};

RhsEvaluation assemble_rhs(const DGState& state, const Mesh& mesh, const QuadratureRule& rule,
                           const KernelSet& kernels, const BreakageTables& tables);

// state + dt * dcoeffs, time advanced by dt.
DGState euler_update(const DGState& state, const RhsEvaluation& rhs, double dt);

// Largest forward-Euler step with guaranteed positive cell averages:
//   dt < 1 / max_{j,a} [ (Gamma_{j,j}^a)_+ + G_{j-1,j}^a
//                        + (-B_{a,j})_+ / (h_j nbar_j) ].
// Requires every cell average positive; returns +infinity when all rates
// vanish. The overload taking a FluxSweep reuses an assembly already done.
double cfl_max_dt(const DGState& state, const Mesh& mesh, const QuadratureRule& rule,
                  const KernelSet& kernels, const BreakageTables& tables);
double cfl_max_dt_from_sweep(const DGState& state, const Mesh& mesh,
                             const BreakageTables& tables, const FluxSweep& sweep);

// State-independent bound for pure-breakage kernels (Gamma and B_a vanish).
double cfl_breakage_bound(const BreakageTables& tables);

}  // namespace pbedg
