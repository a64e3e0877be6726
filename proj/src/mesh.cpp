#include "pbedg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pbedg/errors.hpp"

namespace pbedg {

Mesh Mesh::geometric(int cells, double x0, double span_exponent) {
  if (cells < 1) throw InvalidArgument("mesh: cell count must be >= 1");
  if (!(x0 > 0.0)) throw InvalidArgument("mesh: x0 must be positive");
  if (!(span_exponent > 0.0)) throw InvalidArgument("mesh: span exponent must be positive");
  const double r = std::pow(2.0, span_exponent / cells);
  std::vector<double> interfaces(cells + 1);
  interfaces[0] = 0.0;
  interfaces[1] = x0;
  for (int i = 2; i <= cells; ++i) interfaces[i] = r * interfaces[i - 1];
  Mesh mesh = from_interfaces(std::move(interfaces));
  mesh.ratio_ = r;
  return mesh;
}

Mesh Mesh::from_interfaces(std::vector<double> interfaces) {
  if (interfaces.size() < 2) throw InvalidArgument("mesh: need at least two interfaces");
  if (interfaces.front() != 0.0) throw InvalidArgument("mesh: first interface must be 0");
  for (size_t i = 1; i < interfaces.size(); ++i) {
    if (!(interfaces[i] > interfaces[i - 1])) {
      throw InvalidArgument("mesh: interfaces must be strictly increasing");
    }
  }
  Mesh mesh;
  mesh.interfaces_ = std::move(interfaces);
  const int n = static_cast<int>(mesh.interfaces_.size()) - 1;
  mesh.widths_.resize(n);
  mesh.midpoints_.resize(n);
  for (int j = 0; j < n; ++j) {
    mesh.widths_[j] = mesh.interfaces_[j + 1] - mesh.interfaces_[j];
    mesh.midpoints_[j] = 0.5 * (mesh.interfaces_[j] + mesh.interfaces_[j + 1]);
  }
  return mesh;
}

int Mesh::locate(double x) const {
  if (!(x > 0.0) || x > interfaces_.back()) {
    throw OutOfDomain("locate: x = " + std::to_string(x) + " outside (0, " +
                      std::to_string(interfaces_.back()) + "]");
  }
  // First interface >= x; ties belong to the cell on the left.
  const auto it = std::lower_bound(interfaces_.begin(), interfaces_.end(), x);
  return static_cast<int>(it - interfaces_.begin()) - 1;
}

std::vector<double> Mesh::gauss_points(const QuadratureRule& rule, int j) const {
  std::vector<double> pts(rule.order());
  const double mid = midpoints_[j], half = 0.5 * widths_[j];
  for (int a = 0; a < rule.order(); ++a) pts[a] = mid + half * rule.node(a);
  return pts;
}

}  // namespace pbedg
