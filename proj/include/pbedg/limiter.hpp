#pragma once

#include <vector>

#include "pbedg/basis.hpp"

namespace pbedg {

enum class LimiterMode {
  kGaussOnly,  // enforce nonnegativity at the scheme's Gauss points only
  kFullCell,   // enforce it over the whole cell (default)
};

struct LimiterReport {
  std::vector<double> thetas;        // per cell; 1 where untouched
  std::vector<int> skipped_cells;    // averages <= 0, left unmodified
  int touched = 0;                   // cells with theta < 1
  double min_theta = 1.0;
  LimiterMode mode = LimiterMode::kFullCell;
};

// Linear scaling about the cell average:
//   n~ = theta (n_h - nbar) + nbar,
//   theta = min(1, nbar / (nbar - min n_h)),
// minimum over the whole cell (default) or over the Gauss set only. Preserves
// cell averages exactly; scaling multiplies the i >= 1 coefficients by theta.
// Cells with nonpositive averages are skipped and flagged. Full-cell mode is
// the one the positivity bound assumes: the fluxes integrate the polynomials
// over partial intervals, so values between Gauss nodes matter.
std::pair<DGState, LimiterReport> limit_state(const DGState& state, const Mesh& mesh,
                                              const QuadratureRule& rule,
                                              LimiterMode mode = LimiterMode::kFullCell);

// Minimum of the cell-j polynomial: closed form through k = 2, Chebyshev
// sampling plus one Newton refinement for higher degrees. Exposed for tests.
double cell_polynomial_min(const DGState& state, int j);

}  // namespace pbedg
