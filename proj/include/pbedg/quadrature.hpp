#pragma once

#include <functional>
#include <vector>

namespace pbedg {

// Gauss-Legendre rule on [-1, 1]: exact for polynomials of degree <= 2Q - 1.
class QuadratureRule {
 public:
  // Nodes and weights from Newton iteration on the Legendre polynomial;
  // 1 <= order <= 20.
  static QuadratureRule gauss(int order);

  int order() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  double node(int a) const { return nodes_[a]; }
  double weight(int a) const { return weights_[a]; }

 private:
  QuadratureRule() = default;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

// Adaptive bisection quadrature (Gauss-15 panels) used by reference oracles,
// not by the scheme itself. Throws OracleFailure when the recursion cannot
// meet the tolerance.
double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-9, double abs_tol = 1e-14);

}  // namespace pbedg
