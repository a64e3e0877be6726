#include "pbedg/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pbedg/errors.hpp"

namespace pbedg {

namespace {

constexpr double kSeriesAsymptoticSwitch = 100.0;

double i1_scaled_series(double z) {
  // I_1(z) = sum_m (z/2)^{2m+1} / (m! (m+1)!), every term positive. The
  // peak term stays far below overflow for z < ~700, so scaling by e^{-z}
  // afterwards is exact to round-off.
  const double q = 0.25 * z * z;
  double term = 0.5 * z;
  double sum = term;
  for (int m = 1; m < 400; ++m) {
    term *= q / (static_cast<double>(m) * (m + 1));
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum * std::exp(-z);
}

double i1_scaled_asymptotic(double z) {
  // I_1(z) ~ e^z / sqrt(2 pi z) * sum_k u_k, u_0 = 1,
  // u_k = -u_{k-1} (mu - (2k-1)^2) / (8 k z), mu = 4. Truncated at the
  // smallest term; for z >= 100 that is far below machine precision.
  const double mu = 4.0;
  double term = 1.0;
  double sum = term;
  for (int k = 1; k < 40; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (8.0 * k * z);
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    sum += term;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * z);
}

}  // namespace

double bessel_i1_scaled(double z) {
  if (z < 0.0) throw InvalidArgument("bessel_i1_scaled: argument must be nonnegative");
  if (z == 0.0) return 0.0;
  return z < kSeriesAsymptoticSwitch ? i1_scaled_series(z) : i1_scaled_asymptotic(z);
}

double solution_const_agg(double x, double t) {
  const double m = 2.0 / (2.0 + t);
  return x * m * m * std::exp(-m * x);
}

double solution_sum_agg(double x, double t) {
  const double big_t = -std::expm1(-t);
  if (big_t <= 0.0) return x * std::exp(-x);
  const double s = std::sqrt(big_t);
  const double z = 2.0 * x * s;
  return (1.0 - big_t) / s * std::exp(-x * (1.0 - s) * (1.0 - s)) * bessel_i1_scaled(z);
}

double solution_prod_agg(double x, double t) {
  if (t > 1.0) {
    throw ValidityError("multiplicative-kernel solution is only valid for t <= 1, got t = " +
                        std::to_string(t));
  }
  if (t <= 0.0) return std::exp(-x);
  if (!(x > 0.0)) throw InvalidArgument("multiplicative-kernel solution needs x > 0");
  const double s = std::sqrt(t);
  const double z = 2.0 * x * s;
  return std::exp(-x * (1.0 - s) * (1.0 - s)) * bessel_i1_scaled(z) / (x * s);
}

double solution_binlin_brk(double x, double t) {
  const double g = 1.0 + t;
  return x * g * g * std::exp(-g * x);
}

double solution_binquad_brk(double x, double t) {
  return x * std::exp(-x - t * x * x) * (1.0 + 2.0 * t * (1.0 + x));
}

double solution_coupled_steady(double x, double /*t*/) { return x * std::exp(-x); }

double m0_const_agg(double t) { return 2.0 / (2.0 + t); }

double m0_sum_agg(double t) { return std::exp(-t); }

double m0_binlin_brk(double t) { return 1.0 + t; }

double m0_coupled_steady(double /*t*/) { return 1.0; }

double m2_prod_agg(double t) {
  if (t >= 1.0) throw ValidityError("second moment of the multiplicative case diverges at t = 1");
  return 1.0 / (1.0 - t);
}

}  // namespace pbedg
