#include "pbedg/limiter.hpp"

#include <algorithm>
#include <cmath>

namespace pbedg {

double cell_polynomial_min(const DGState& state, int j) {
  const double* c = state.coeffs.row(j);
  const int k = state.degree;
  double m = std::min(eval_state_ref(state, j, -1.0), eval_state_ref(state, j, 1.0));
  if (k <= 1) return m;
  if (k == 2) {
    // n(xi) = c0 + c1 xi + c2 (3 xi^2 - 1)/2; stationary at xi = -c1 / (3 c2).
    if (c[2] != 0.0) {
      const double xi = -c[1] / (3.0 * c[2]);
      if (xi > -1.0 && xi < 1.0) m = std::min(m, eval_state_ref(state, j, xi));
    }
    return m;
  }
  // Chebyshev sampling, then one Newton step on the derivative from the best
  // interior sample.
  constexpr int kSamples = 64;
  double best_xi = -1.0;
  for (int s = 0; s < kSamples; ++s) {
    const double xi = std::cos(M_PI * (s + 0.5) / kSamples);
    const double v = eval_state_ref(state, j, xi);
    if (v < m) {
      m = v;
      best_xi = xi;
    }
  }
  if (best_xi > -1.0 && best_xi < 1.0) {
    // One Newton refinement of the interior minimum via centered differences.
    const double eps = 1e-6;
    const double va = eval_state_ref(state, j, best_xi - eps);
    const double vb = eval_state_ref(state, j, best_xi + eps);
    const double vc = eval_state_ref(state, j, best_xi);
    const double d1 = (vb - va) / (2.0 * eps);
    const double d2 = (vb - 2.0 * vc + va) / (eps * eps);
    if (d2 > 0.0) {
      const double xi = std::clamp(best_xi - d1 / d2, -1.0, 1.0);
      m = std::min(m, eval_state_ref(state, j, xi));
    }
  }
  return m;
}

std::pair<DGState, LimiterReport> limit_state(const DGState& state, const Mesh& mesh,
                                              const QuadratureRule& rule, LimiterMode mode) {
  DGState out = state;
  LimiterReport report;
  report.mode = mode;
  report.thetas.assign(state.cells(), 1.0);
  const int k = state.degree;
  for (int j = 0; j < state.cells(); ++j) {
    const double avg = state.cell_average(j);
    if (!(avg > 0.0)) {
      report.skipped_cells.push_back(j);
      continue;
    }
    if (k == 0) continue;
    double m;
    if (mode == LimiterMode::kGaussOnly) {
      m = avg;
      for (int a = 0; a < rule.order(); ++a) {
        m = std::min(m, eval_state_ref(state, j, rule.node(a)));
      }
    } else {
      m = cell_polynomial_min(state, j);
    }
    if (m >= 0.0) continue;
    // avg > 0 > m, so the denominator is positive.
    const double theta = std::min(1.0, avg / (avg - m));
    report.thetas[j] = theta;
    report.min_theta = std::min(report.min_theta, theta);
    ++report.touched;
    for (int i = 1; i <= k; ++i) out.coeffs(j, i) *= theta;
  }
  return {std::move(out), std::move(report)};
}

}  // namespace pbedg
