#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pbedg/kernels.hpp"

namespace pbedg {

// One benchmark configuration: kernels, domain anchor, initial mass density
// and, where known, the closed-form solution and moments it is judged
// against. Cases without a closed form fall back to self-convergence
// between resolutions.
struct BenchmarkCase {
  std::string id;
  std::string description;
  KernelSet kernels;
  double x_min = 0.0;  // first interior interface of the geometric mesh

  std::function<double(double)> initial;              // n0(x)
  std::function<double(double, double)> solution;     // n(x, t); empty if unknown
  double t_max = 0.0;                                 // solution validity bound
  std::function<double(double)> m0;                   // closed-form M_0; empty if unknown
  std::function<double(double)> m2;                   // closed-form M_2; empty if unknown

  bool has_solution() const { return static_cast<bool>(solution); }
};

// Ids accepted by make_case, in catalog order:
//   const-agg, sum-agg, prod-agg, binlin-brk, binquad-brk, powerlaw-brk,
//   coupled-steady, coupled-transient
const std::vector<std::string>& case_ids();

BenchmarkCase make_case(const std::string& id);

}  // namespace pbedg
