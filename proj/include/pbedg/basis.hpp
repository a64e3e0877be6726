#pragma once

#include <functional>

#include "pbedg/array2d.hpp"
#include "pbedg/mesh.hpp"

namespace pbedg {

// Legendre polynomial P_i(xi) on [-1, 1] by the three-term recurrence.
double legendre_eval(int degree, double xi);

// P_i'(xi) via the derivative recurrence; exact at the endpoints.
double legendre_deriv(int degree, double xi);

// Values P_0..P_k at xi written to out[0..k].
void legendre_all(int k, double xi, double* out);

// Normalization (phi_i, phi_i) = 2 / (2i + 1) of the reference basis.
inline double legendre_norm(int i) { return 2.0 / (2 * i + 1); }

// Piecewise-polynomial solution: coeffs(j, i) is the coefficient of P_i on
// cell j, so coeffs(j, 0) is the cell average of the represented density.
struct DGState {
  DGState() = default;
  DGState(int cells, int degree, double time = 0.0)
      : degree(degree), time(time), coeffs(cells, degree + 1) {}

  int cells() const { return coeffs.rows(); }
  double cell_average(int j) const { return coeffs(j, 0); }

  int degree = 0;
  double time = 0.0;
  Array2D coeffs;
};

// Value of the state at the reference coordinate xi of cell j.
double eval_state_ref(const DGState& state, int j, double xi);

// Value at physical x inside cell j (no lookup).
double eval_state_in_cell(const DGState& state, const Mesh& mesh, int j, double x);

// Value at physical x; locates the owning cell first.
double eval_state(const DGState& state, const Mesh& mesh, double x);

// L2 projection of n0 onto the degree-k space, cell by cell, using a
// projection_order-point Gauss rule. Throws ProjectionFailure on non-finite
// samples, naming the cell.
DGState project_initial(const std::function<double(double)>& n0, const Mesh& mesh,
                        int degree, int projection_order = 16);

// State values at every quadrature point of every cell: out(j, a) = n_h(x_j^a).
Array2D values_at_gauss_points(const DGState& state, const Mesh& mesh,
                               const QuadratureRule& rule);

// Integral of the state over the domain, sum of h_j * average_j. For the
// mass-conservative variable this is the first moment of the number density.
double total_mass(const DGState& state, const Mesh& mesh);

}  // namespace pbedg
