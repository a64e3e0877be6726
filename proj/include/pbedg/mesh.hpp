#pragma once

#include <optional>
#include <vector>

#include "pbedg/quadrature.hpp"

namespace pbedg {

// Geometric grid exponent: the default span covers about 2^30 between the
// first interior interface and the right boundary.
inline constexpr double kDefaultSpanExponent = 30.0;

// Partition of (0, L] into N half-open cells I_j = (x_{j-1/2}, x_{j+1/2}].
// 0-based: cell j spans (interface(j), interface(j+1)], j = 0..N-1.
class Mesh {
 public:
  // x_{1/2} = 0, x_{3/2} = x0, then x_{j+1/2} = r x_{j-1/2} with
  // r = 2^(span_exponent / N).
  static Mesh geometric(int cells, double x0,
                        double span_exponent = kDefaultSpanExponent);

  // Arbitrary strictly increasing interfaces starting at 0 (uniform test
  // meshes and custom grids).
  static Mesh from_interfaces(std::vector<double> interfaces);

  int cells() const { return static_cast<int>(widths_.size()); }
  double interface(int i) const { return interfaces_[i]; }
  const std::vector<double>& interfaces() const { return interfaces_; }
  double width(int j) const { return widths_[j]; }
  double midpoint(int j) const { return midpoints_[j]; }
  double length() const { return interfaces_.back(); }
  // Geometric ratio; empty for meshes built from explicit interfaces.
  std::optional<double> ratio() const { return ratio_; }

  // Index of the cell whose half-open interval contains x; interface values
  // resolve to the cell on their left. Throws OutOfDomain for x <= 0 or x > L.
  int locate(double x) const;

  // Quadrature abscissae of cell j mapped from the rule's reference nodes.
  std::vector<double> gauss_points(const QuadratureRule& rule, int j) const;

 private:
  Mesh() = default;
  std::vector<double> interfaces_;
  std::vector<double> widths_;
  std::vector<double> midpoints_;
  std::optional<double> ratio_;
};

}  // namespace pbedg
