#include "pbedg/kernels.hpp"

#include <cmath>

#include "pbedg/errors.hpp"

namespace pbedg {

double KernelSet::A(double u, double v) const {
  if (!(v > 0.0)) throw InvalidArgument("A(u, v): v must be positive");
  return K(u, v) / v;
}

double KernelSet::B(double u, double v) const {
  if (!(v > 0.0)) throw InvalidArgument("B(u, v): v must be positive");
  if (u >= v) return 0.0;
  return u * b(u, v) * S(v) / v;
}

KernelSet KernelSet::builtin(const std::string& id) {
  KernelSet ks;
  ks.name = id;
  if (id == "const_agg") {
    ks.has_aggregation = true;
    ks.K = [](double, double) { return 1.0; };
  } else if (id == "sum_agg") {
    ks.has_aggregation = true;
    ks.K = [](double u, double v) { return u + v; };
  } else if (id == "prod_agg") {
    ks.has_aggregation = true;
    ks.K = [](double u, double v) { return u * v; };
  } else if (id == "binlin_brk") {
    ks.has_breakage = true;
    ks.b = [](double, double v) { return 2.0 / v; };
    ks.S = [](double v) { return v; };
  } else if (id == "binquad_brk") {
    ks.has_breakage = true;
    ks.b = [](double, double v) { return 2.0 / v; };
    ks.S = [](double v) { return v * v; };
  } else if (id == "coupled") {
    ks.has_aggregation = true;
    ks.has_breakage = true;
    ks.K = [](double, double) { return 1.0; };
    ks.b = [](double, double v) { return 2.0 / v; };
    ks.S = [](double v) { return 0.5 * v; };
  } else {
    throw InvalidArgument("unknown kernel set '" + id + "'");
  }
  return ks;
}

KernelSet KernelSet::hill_ng(int p, double m) {
  if (p < 2) throw InvalidArgument("hill_ng: fragment count p must be >= 2");
  if (!(m >= 0.0)) throw InvalidArgument("hill_ng: shape m must be >= 0");
  const double q = m + (m + 1.0) * (p - 2.0);
  // C = Gamma(m+q+2) / (Gamma(m+1) Gamma(q+1)) through lgamma to keep large
  // parameter combinations finite.
  const double log_c = std::lgamma(m + q + 2.0) - std::lgamma(m + 1.0) - std::lgamma(q + 1.0);
  const double pc = p * std::exp(log_c);
  KernelSet ks;
  ks.name = "hill_ng_p" + std::to_string(p);
  ks.has_breakage = true;
  ks.b = [pc, m, q](double u, double v) {
    if (u >= v || u <= 0.0) return 0.0;
    return pc * std::pow(u, m) * std::pow(v - u, q) / std::pow(v, m + q + 1.0);
  };
  ks.S = [](double v) { return v * v; };
  return ks;
}

}  // namespace pbedg
