#pragma once

#include <functional>
#include <string>

namespace pbedg {

// Coagulation rate K(u, v), fragmentation daughter distribution b(u, v) and
// selection rate S(v), with the derived mass-flux integrands
//   A(u, v) = K(u, v) / v          (aggregation)
//   B(u, v) = u b(u, v) S(v) / v   (breakage, 0 for u >= v).
struct KernelSet {
  std::string name;
  bool has_aggregation = false;
  bool has_breakage = false;
  std::function<double(double, double)> K;  // symmetric, >= 0
  std::function<double(double, double)> b;  // b(u, v): fragments of size u from v
  std::function<double(double)> S;          // breakage selection rate

  double A(double u, double v) const;
  double B(double u, double v) const;

  // Registry of the built-in sets:
  //   const_agg    K = 1
  //   sum_agg      K = u + v
  //   prod_agg     K = u v
  //   binlin_brk   b = 2/v, S = v
  //   binquad_brk  b = 2/v, S = v^2
  //   coupled      K = 1, b = 2/v, S = v/2
  static KernelSet builtin(const std::string& id);

  // Hill-Ng power-law daughter distribution producing p fragments with shape
  // parameter m >= 0 (p >= 2), paired with S = v^2:
  //   b(u, v) = p C u^m (v - u)^q / v^{m+q+1},  q = m + (m+1)(p-2),
  //   C = Gamma(m+q+2) / (Gamma(m+1) Gamma(q+1)).
  // p = 2, m = 0 reduces to the binary 2/v distribution.
  static KernelSet hill_ng(int p, double m);
};

}  // namespace pbedg
