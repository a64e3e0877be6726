#include "pbedg/quadrature.hpp"

#include <cmath>
#include <cstdlib>

#include "pbedg/errors.hpp"

namespace pbedg {

namespace {

// Legendre P_n and P_n' at x by the three-term recurrence.
void legendre_with_derivative(int n, double x, double* p, double* dp) {
  double p0 = 1.0, p1 = x;
  for (int i = 1; i < n; ++i) {
    const double p2 = ((2 * i + 1) * x * p1 - i * p0) / (i + 1);
    p0 = p1;
    p1 = p2;
  }
  *p = (n == 0) ? 1.0 : p1;
  *dp = (n == 0) ? 0.0 : n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

QuadratureRule QuadratureRule::gauss(int order) {
  if (order < 1 || order > 20) {
    throw InvalidArgument("quadrature order must be in [1, 20], got " + std::to_string(order));
  }
  QuadratureRule rule;
  rule.nodes_.resize(order);
  rule.weights_.resize(order);
  if (order == 1) {
    rule.nodes_[0] = 0.0;
    rule.weights_[0] = 2.0;
    return rule;
  }
  const int m = (order + 1) / 2;
  for (int a = 0; a < m; ++a) {
    // Chebyshev-based initial guess, then Newton to 1e-15.
    double x = std::cos(M_PI * (a + 0.75) / (order + 0.5));
    double p, dp;
    for (int it = 0; it < 100; ++it) {
      legendre_with_derivative(order, x, &p, &dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre_with_derivative(order, x, &p, &dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Nodes stored in ascending order; symmetric pair filled from both ends.
    rule.nodes_[a] = -x;
    rule.nodes_[order - 1 - a] = x;
    rule.weights_[a] = w;
    rule.weights_[order - 1 - a] = w;
  }
  if (order % 2 == 1) rule.nodes_[order / 2] = 0.0;
  return rule;
}

namespace {

double gauss15_panel(const std::function<double(double)>& f, double a, double b) {
  static const QuadratureRule rule = QuadratureRule::gauss(15);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < 15; ++i) acc += rule.weight(i) * f(mid + half * rule.node(i));
  return half * acc;
}

double adapt(const std::function<double(double)>& f, double a, double b, double whole,
             double rel_tol, double abs_tol, double scale, int depth) {
  if (depth > 48) {
    throw OracleFailure("adaptive quadrature failed to converge on [" + std::to_string(a) +
                        ", " + std::to_string(b) + "]");
  }
  const double m = 0.5 * (a + b);
  const double left = gauss15_panel(f, a, m);
  const double right = gauss15_panel(f, m, b);
  const double diff = std::abs(left + right - whole);
  if (diff <= abs_tol || diff <= rel_tol * std::max(scale, std::abs(left + right))) {
    return left + right;
  }
  return adapt(f, a, m, left, rel_tol, abs_tol, scale, depth + 1) +
         adapt(f, m, b, right, rel_tol, abs_tol, scale, depth + 1);
}

}  // namespace

double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_tol) {
  if (!(b >= a)) throw InvalidArgument("adaptive_integrate: interval end precedes start");
  if (a == b) return 0.0;
  // First split gives a magnitude estimate so the relative test has a scale.
  const double m = 0.5 * (a + b);
  const double rough = std::abs(gauss15_panel(f, a, m)) + std::abs(gauss15_panel(f, m, b));
  return adapt(f, a, b, gauss15_panel(f, a, b), rel_tol, abs_tol, rough, 0);
}

}  // namespace pbedg
