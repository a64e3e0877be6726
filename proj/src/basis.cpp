#include "pbedg/basis.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "pbedg/errors.hpp"

namespace pbedg {

double legendre_eval(int degree, double xi) {
  if (degree == 0) return 1.0;
  double p0 = 1.0, p1 = xi;
  for (int i = 1; i < degree; ++i) {
    const double p2 = ((2 * i + 1) * xi * p1 - i * p0) / (i + 1);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double legendre_deriv(int degree, double xi) {
  if (degree == 0) return 0.0;
  // d_{i+1} = d_{i-1} + (2i+1) P_i, stable on all of [-1, 1].
  double p0 = 1.0, p1 = xi;
  double d0 = 0.0, d1 = 1.0;
  for (int i = 1; i < degree; ++i) {
    const double p2 = ((2 * i + 1) * xi * p1 - i * p0) / (i + 1);
    const double d2 = d0 + (2 * i + 1) * p1;
    p0 = p1;
    p1 = p2;
    d0 = d1;
    d1 = d2;
  }
  return d1;
}

void legendre_all(int k, double xi, double* out) {
  out[0] = 1.0;
  if (k >= 1) out[1] = xi;
  for (int i = 1; i < k; ++i) {
    out[i + 1] = ((2 * i + 1) * xi * out[i] - i * out[i - 1]) / (i + 1);
  }
}

double eval_state_ref(const DGState& state, int j, double xi) {
  const double* c = state.coeffs.row(j);
  const int k = state.degree;
  double acc = c[0];
  if (k >= 1) acc += c[1] * xi;
  double p0 = 1.0, p1 = xi;
  for (int i = 1; i < k; ++i) {
    const double p2 = ((2 * i + 1) * xi * p1 - i * p0) / (i + 1);
    acc += c[i + 1] * p2;
    p0 = p1;
    p1 = p2;
  }
  return acc;
}

double eval_state_in_cell(const DGState& state, const Mesh& mesh, int j, double x) {
  const double xi = 2.0 * (x - mesh.midpoint(j)) / mesh.width(j);
  return eval_state_ref(state, j, xi);
}

double eval_state(const DGState& state, const Mesh& mesh, double x) {
  return eval_state_in_cell(state, mesh, mesh.locate(x), x);
}

DGState project_initial(const std::function<double(double)>& n0, const Mesh& mesh,
                        int degree, int projection_order) {
  const QuadratureRule rule = QuadratureRule::gauss(projection_order);
  const int q = rule.order();
  DGState state(mesh.cells(), degree);
  std::vector<double> basis(static_cast<size_t>(q) * (degree + 1));
  for (int a = 0; a < q; ++a) legendre_all(degree, rule.node(a), &basis[a * (degree + 1)]);
  for (int j = 0; j < mesh.cells(); ++j) {
    const double mid = mesh.midpoint(j), half = 0.5 * mesh.width(j);
    for (int a = 0; a < q; ++a) {
      const double x = mid + half * rule.node(a);
      const double v = n0(x);
      if (!std::isfinite(v)) {
        throw ProjectionFailure(j, "projection: non-finite sample in cell " +
                                       std::to_string(j) + " at x = " + std::to_string(x));
      }
      const double wv = rule.weight(a) * v;
      const double* p = &basis[a * (degree + 1)];
      for (int i = 0; i <= degree; ++i) state.coeffs(j, i) += wv * p[i];
    }
    for (int i = 0; i <= degree; ++i) state.coeffs(j, i) /= legendre_norm(i);
  }
  return state;
}

double total_mass(const DGState& state, const Mesh& mesh) {
  double acc = 0.0;
  for (int j = 0; j < mesh.cells(); ++j) acc += mesh.width(j) * state.cell_average(j);
  return acc;
}

Array2D values_at_gauss_points(const DGState& state, const Mesh& mesh,
                               const QuadratureRule& rule) {
  const int q = rule.order();
  Array2D out(mesh.cells(), q);
  std::vector<double> basis(static_cast<size_t>(q) * (state.degree + 1));
  for (int a = 0; a < q; ++a) legendre_all(state.degree, rule.node(a), &basis[a * (state.degree + 1)]);
  for (int j = 0; j < mesh.cells(); ++j) {
    const double* c = state.coeffs.row(j);
    for (int a = 0; a < q; ++a) {
      const double* p = &basis[a * (state.degree + 1)];
      double acc = 0.0;
      for (int i = 0; i <= state.degree; ++i) acc += c[i] * p[i];
      out(j, a) = acc;
    }
  }
  return out;
}

}  // namespace pbedg
