#include "pbedg/cases.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "pbedg/analytic.hpp"
#include "pbedg/errors.hpp"

namespace pbedg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Shape parameters of the normal initial mass density used by the
// multiple-breakage case. Less than 1e-6 of the density's mass lies below
// x = 0, so restricting it to the positive axis loses nothing measurable.
constexpr double kNormalMean = 1.0;
constexpr double kNormalSigma = 0.2;

double exp_mass_density(double x) { return x * std::exp(-x); }

double normal_mass_density(double x) {
  const double z = (x - kNormalMean) / kNormalSigma;
  return std::exp(-0.5 * z * z) / (kNormalSigma * std::sqrt(2.0 * std::numbers::pi));
}

double squared_exp_mass_density(double x) { return 4.0 * x * x * std::exp(-2.0 * x); }

}  // namespace

const std::vector<std::string>& case_ids() {
  static const std::vector<std::string> ids = {"const-agg",    "sum-agg",      "prod-agg",
                                               "binlin-brk",   "binquad-brk",  "powerlaw-brk",
                                               "coupled-steady", "coupled-transient"};
  return ids;
}

BenchmarkCase make_case(const std::string& id) {
  BenchmarkCase c;
  c.id = id;
  c.t_max = kInf;
  if (id == "const-agg") {
    c.description = "constant-kernel coagulation of x e^{-x}";
    c.kernels = KernelSet::builtin("const_agg");
    c.x_min = 1e-3;
    c.initial = exp_mass_density;
    c.solution = solution_const_agg;
    c.m0 = m0_const_agg;
  } else if (id == "sum-agg") {
    c.description = "additive-kernel coagulation of x e^{-x}";
    c.kernels = KernelSet::builtin("sum_agg");
    c.x_min = 1e-3;
    c.initial = exp_mass_density;
    c.solution = solution_sum_agg;
    c.m0 = m0_sum_agg;
  } else if (id == "prod-agg") {
    c.description = "multiplicative-kernel coagulation of e^{-x}, pre-gelation";
    c.kernels = KernelSet::builtin("prod_agg");
    c.x_min = 1e-3;
    c.initial = [](double x) { return std::exp(-x); };
    c.solution = solution_prod_agg;
    c.t_max = 1.0;
    c.m2 = m2_prod_agg;  // the number moment M_0 diverges for this start
  } else if (id == "binlin-brk") {
    c.description = "binary breakage with linear selection of x e^{-x}";
    c.kernels = KernelSet::builtin("binlin_brk");
    c.x_min = 1e-6;
    c.initial = exp_mass_density;
    c.solution = solution_binlin_brk;
    c.m0 = m0_binlin_brk;
  } else if (id == "binquad-brk") {
    c.description = "binary breakage with quadratic selection of x e^{-x}";
    c.kernels = KernelSet::builtin("binquad_brk");
    c.x_min = 1e-6;
    c.initial = exp_mass_density;
    c.solution = solution_binquad_brk;
  } else if (id == "powerlaw-brk") {
    c.description = "four-fragment power-law breakage of a normal pulse";
    c.kernels = KernelSet::hill_ng(4, 2.0);
    c.x_min = 1e-6;
    c.initial = normal_mass_density;
  } else if (id == "coupled-steady") {
    c.description = "coupled coagulation-breakage at the steady state x e^{-x}";
    c.kernels = KernelSet::builtin("coupled");
    c.x_min = 1e-3;
    c.initial = exp_mass_density;
    c.solution = solution_coupled_steady;
    c.m0 = m0_coupled_steady;
  } else if (id == "coupled-transient") {
    c.description = "coupled coagulation-breakage of 4 x^2 e^{-2x}, constant particle count";
    c.kernels = KernelSet::builtin("coupled");
    c.x_min = 1e-3;
    c.initial = squared_exp_mass_density;
    c.m0 = [](double) { return 1.0; };
  } else {
    throw InvalidArgument("unknown case id: " + id);
  }
  return c;
}

}  // namespace pbedg
