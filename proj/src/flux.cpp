#include "pbedg/flux.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pbedg/errors.hpp"

namespace pbedg {

namespace {

// Partial intervals narrower than this contribute nothing.
constexpr double kDegenerateWidth = 1e-300;

// Locate z in (0, L] without the error path; ties resolve to the left cell.
inline int locate_fast(const std::vector<double>& interfaces, double z) {
  const auto it = std::lower_bound(interfaces.begin(), interfaces.end(), z);
  return static_cast<int>(it - interfaces.begin()) - 1;
}

// Direct aggregation helpers shared by the sweep and the per-index entry
// points; all integrals use the scheme's own rule.
struct AggCtx {
  const DGState& state;
  const Mesh& mesh;
  const QuadratureRule& rule;
  const KernelSet& kernels;
  const Array2D& gauss_x;  // N x Q abscissae
  const Array2D& nh;       // N x Q state values there

  // int_a^b A(u, v) n_h(v) dv with [a, b] inside cell J.
  double partial(double u, double a, double b, int J) const {
    if (b - a <= kDegenerateWidth) return 0.0;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (int be = 0; be < rule.order(); ++be) {
      const double y = mid + half * rule.node(be);
      acc += rule.weight(be) * kernels.K(u, y) / y * eval_state_in_cell(state, mesh, J, y);
    }
    return half * acc;
  }

  // int over the whole cell c using the precomputed Gauss values.
  double cell_integral(double u, int c) const {
    double acc = 0.0;
    for (int be = 0; be < rule.order(); ++be) {
      const double y = gauss_x(c, be);
      acc += rule.weight(be) * kernels.K(u, y) / y * nh(c, be);
    }
    return 0.5 * mesh.width(c) * acc;
  }

  // Gamma(u, z) ~ int_z^L A(u, v) n_h(v) dv: partial remainder of the cell
  // containing z plus all full cells above it.
  double gamma(double u, double z) const {
    const int J = locate_fast(mesh.interfaces(), z);
    double acc = partial(u, z, mesh.interface(J + 1), J);
    for (int c = J + 1; c < mesh.cells(); ++c) acc += cell_integral(u, c);
    return acc;
  }
};

// G(v) = int_0^{xstar} B(u, v) du for xstar inside cell j: full cells below j
// plus the partial piece [X_j, xstar]. Direct version for per-index queries.
double breakage_prefix_at(const Mesh& mesh, const QuadratureRule& rule, const KernelSet& kernels,
                          const Array2D& gauss_x, int j, double xstar, double v) {
  double acc = 0.0;
  for (int c = 0; c < j; ++c) {
    double s = 0.0;
    for (int be = 0; be < rule.order(); ++be) {
      s += rule.weight(be) * kernels.B(gauss_x(c, be), v);
    }
    acc += 0.5 * mesh.width(c) * s;
  }
  const double a = mesh.interface(j);
  if (xstar - a > kDegenerateWidth) {
    const double mid = 0.5 * (a + xstar), half = 0.5 * (xstar - a);
    double s = 0.0;
    for (int be = 0; be < rule.order(); ++be) {
      s += rule.weight(be) * kernels.B(mid + half * rule.node(be), v);
    }
    acc += half * s;
  }
  return acc;
}

}  // namespace

Array2D gauss_point_matrix(const Mesh& mesh, const QuadratureRule& rule) {
  Array2D out(mesh.cells(), rule.order());
  for (int j = 0; j < mesh.cells(); ++j) {
    const double mid = mesh.midpoint(j), half = 0.5 * mesh.width(j);
    for (int a = 0; a < rule.order(); ++a) out(j, a) = mid + half * rule.node(a);
  }
  return out;
}

BreakageTables build_breakage_tables(const Mesh& mesh, const QuadratureRule& rule,
                                     const KernelSet& kernels) {
  BreakageTables tables;
  if (!kernels.has_breakage) return tables;
  const int n = mesh.cells(), q = rule.order();
  tables.cells = n;
  tables.order = q;
  const Array2D gx = gauss_point_matrix(mesh, rule);

  // Interface prefixes by accumulation over cells: one pass per abscissa.
  tables.interface_prefix = Array2D(n + 1, n * q);
  for (int l = 0; l < n; ++l) {
    for (int a = 0; a < q; ++a) {
      const double v = gx(l, a);
      double acc = 0.0;
      for (int c = 0; c < n; ++c) {
        double s = 0.0;
        for (int be = 0; be < q; ++be) s += rule.weight(be) * kernels.B(gx(c, be), v);
        acc += 0.5 * mesh.width(c) * s;
        tables.interface_prefix(c + 1, l * q + a) = acc;
      }
    }
  }

  // Interior-point variants per (j, gamma): outer partial segment
  // [x_j^gamma, X_{j+1}] with its own abscissae, and the prefix
  // int_0^{x_j^gamma} B(., v) at every outer abscissa v.
  tables.interior_offset.resize(static_cast<size_t>(n) * q + 1);
  size_t total = 0;
  for (int j = 0; j < n; ++j) {
    for (int g = 0; g < q; ++g) {
      tables.interior_offset[static_cast<size_t>(j) * q + g] = total;
      total += static_cast<size_t>(n - j) * q;
    }
  }
  tables.interior_offset.back() = total;
  tables.interior_values.resize(total);
  tables.interior_outer_pts.resize(static_cast<size_t>(n) * q * q);
  tables.interior_outer_half.resize(static_cast<size_t>(n) * q);

  for (int j = 0; j < n; ++j) {
    for (int g = 0; g < q; ++g) {
      const double xstar = gx(j, g);
      const size_t jg = static_cast<size_t>(j) * q + g;
      const double oa = xstar, ob = mesh.interface(j + 1);
      const double ohalf = 0.5 * (ob - oa), omid = 0.5 * (oa + ob);
      tables.interior_outer_half[jg] = ohalf;
      for (int a = 0; a < q; ++a) {
        tables.interior_outer_pts[jg * q + a] = omid + ohalf * rule.node(a);
      }
      // Abscissae of the partial inner piece [X_j, xstar].
      const double ia = mesh.interface(j);
      const double ihalf = 0.5 * (xstar - ia), imid = 0.5 * (ia + xstar);
      double* out = tables.interior_values.data() + tables.interior_offset[jg];
      for (int l = j; l < n; ++l) {
        for (int a = 0; a < q; ++a) {
          const double v = (l == j) ? tables.interior_outer_pts[jg * q + a] : gx(l, a);
          double acc;
          if (l == j) {
            // Fresh abscissa: full prefix over cells < j evaluated directly.
            acc = 0.0;
            for (int c = 0; c < j; ++c) {
              double s = 0.0;
              for (int be = 0; be < q; ++be) s += rule.weight(be) * kernels.B(gx(c, be), v);
              acc += 0.5 * mesh.width(c) * s;
            }
          } else {
            acc = tables.prefix(j, l, a);
          }
          if (2.0 * ihalf > kDegenerateWidth) {
            double s = 0.0;
            for (int be = 0; be < q; ++be) {
              s += rule.weight(be) * kernels.B(imid + ihalf * rule.node(be), v);
            }
            acc += ihalf * s;
          }
          out[static_cast<size_t>(l - j) * q + a] = acc;
        }
      }
    }
  }
  return tables;
}

FluxSweep flux_sweep(const DGState& state, const Mesh& mesh, const QuadratureRule& rule,
                     const KernelSet& kernels, const BreakageTables& tables) {
  const int n = mesh.cells(), q = rule.order();
  const Array2D gx = gauss_point_matrix(mesh, rule);
  const Array2D nh = values_at_gauss_points(state, mesh, rule);
  FluxSweep out;
  out.agg_interface.assign(n + 1, 0.0);
  out.brk_interface.assign(n + 1, 0.0);
  out.agg_interior = Array2D(n, q);
  out.brk_interior = Array2D(n, q);
  out.birth_agg.assign(n, 0.0);
  out.death_agg = Array2D(n, q);

  if (kernels.has_aggregation) {
    const AggCtx ctx{state, mesh, rule, kernels, gx, nh};
    std::vector<double> suffix(n + 1);
    for (int l = 0; l < n; ++l) {
      for (int a = 0; a < q; ++a) {
        const double u = gx(l, a);
        suffix[n] = 0.0;
        for (int c = n - 1; c >= 0; --c) suffix[c] = suffix[c + 1] + ctx.cell_integral(u, c);
        const double wu = 0.5 * mesh.width(l) * rule.weight(a) * nh(l, a);
        // Interface targets above cell l; z grows with i, so after locating
        // the first cut the owning cell of z only ever advances. The first
        // cut X_{l+1} - u is typically far below cell l.
        int J = -1;
        double prev = 0.0;
        for (int i = l + 1; i <= n; ++i) {
          const double z = mesh.interface(i) - u;
          if (J < 0) J = locate_fast(mesh.interfaces(), z);
          while (mesh.interface(J + 1) < z) ++J;
          const double g = ctx.partial(u, z, mesh.interface(J + 1), J) + suffix[J + 1];
          out.agg_interface[i] += wu * g;
          if (i == l + 1) {
            out.death_agg(l, a) = g;
          } else {
            out.birth_agg[i - 1] += wu * (prev - g);
          }
          prev = g;
        }
        // Interior targets: every Gauss point of every cell above l. The
        // abscissae ascend within each cell, so z is again monotone.
        J = -1;
        for (int j = l + 1; j < n; ++j) {
          for (int g2 = 0; g2 < q; ++g2) {
            const double z = gx(j, g2) - u;
            if (J < 0) J = locate_fast(mesh.interfaces(), z);
            while (mesh.interface(J + 1) < z) ++J;
            out.agg_interior(j, g2) +=
                wu * (ctx.partial(u, z, mesh.interface(J + 1), J) + suffix[J + 1]);
          }
        }
      }
    }
    // Partial outer segments [X_j, x_j^gamma]: fresh abscissae, one Gamma each.
    for (int j = 0; j < n; ++j) {
      for (int g = 0; g < q; ++g) {
        const double xstar = gx(j, g);
        const double a0 = mesh.interface(j);
        if (xstar - a0 <= kDegenerateWidth) continue;
        const double half = 0.5 * (xstar - a0), mid = 0.5 * (xstar + a0);
        double acc = 0.0;
        for (int a = 0; a < q; ++a) {
          const double u = mid + half * rule.node(a);
          const double nu = eval_state_in_cell(state, mesh, j, u);
          acc += rule.weight(a) * nu * ctx.gamma(u, xstar - u);
        }
        out.agg_interior(j, g) += half * acc;
      }
    }
    // Each birth term is a difference of nested flux integrals and cannot be
    // negative in exact arithmetic when the integrand is nonnegative. On
    // near-empty cells the true difference sits below the round-off of the
    // terms being subtracted, and a few-ulp negative here would be amplified
    // by 1/nbar into an absurd time-step restriction. Anything within
    // round-off of the adjacent interface fluxes is noise, not a birth rate.
    for (int j = 0; j < n; ++j) {
      if (out.birth_agg[j] < 0.0) {
        const double scale = std::max(std::fabs(out.agg_interface[j]),
                                      std::fabs(out.agg_interface[j + 1]));
        if (-out.birth_agg[j] <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
          out.birth_agg[j] = 0.0;
        }
      }
    }
  }

  if (kernels.has_breakage) {
    for (int l = 0; l < n; ++l) {
      for (int a = 0; a < q; ++a) {
        const double w = 0.5 * mesh.width(l) * rule.weight(a) * nh(l, a);
        for (int i = 1; i <= l; ++i) out.brk_interface[i] -= w * tables.prefix(i, l, a);
      }
    }
    for (int j = 0; j < n; ++j) {
      for (int g = 0; g < q; ++g) {
        const size_t jg = static_cast<size_t>(j) * q + g;
        const double* gv = tables.interior_values.data() + tables.interior_offset[jg];
        const double ohalf = tables.interior_outer_half[jg];
        double acc = 0.0;
        if (2.0 * ohalf > kDegenerateWidth) {
          for (int a = 0; a < q; ++a) {
            const double v = tables.interior_outer_pts[jg * q + a];
            acc += ohalf * rule.weight(a) * eval_state_in_cell(state, mesh, j, v) * gv[a];
          }
        }
        for (int l = j + 1; l < n; ++l) {
          const double hw = 0.5 * mesh.width(l);
          for (int a = 0; a < q; ++a) {
            acc += hw * rule.weight(a) * nh(l, a) * gv[static_cast<size_t>(l - j) * q + a];
          }
        }
        out.brk_interior(j, g) = -acc;
      }
    }
  }
  return out;
}

double interface_flux_agg(const DGState& state, const Mesh& mesh, const QuadratureRule& rule,
                          const KernelSet& kernels, int i) {
  if (i < 0 || i > mesh.cells()) throw InvalidArgument("interface_flux_agg: bad interface index");
  if (!kernels.has_aggregation) return 0.0;
  const Array2D gx = gauss_point_matrix(mesh, rule);
  const Array2D nh = values_at_gauss_points(state, mesh, rule);
  const AggCtx ctx{state, mesh, rule, kernels, gx, nh};
  double acc = 0.0;
  for (int l = 0; l < i; ++l) {
    for (int a = 0; a < rule.order(); ++a) {
      const double u = gx(l, a);
      acc += 0.5 * mesh.width(l) * rule.weight(a) * nh(l, a) *
             ctx.gamma(u, mesh.interface(i) - u);
    }
  }
  return acc;
}

double interface_flux_brk(const DGState& state, const BreakageTables& tables, const Mesh& mesh,
                          const QuadratureRule& rule, int i) {
  if (i < 0 || i > mesh.cells()) throw InvalidArgument("interface_flux_brk: bad interface index");
  if (tables.empty()) return 0.0;
  const Array2D gx = gauss_point_matrix(mesh, rule);
  const Array2D nh = values_at_gauss_points(state, mesh, rule);
  double acc = 0.0;
  for (int l = i; l < mesh.cells(); ++l) {
    for (int a = 0; a < rule.order(); ++a) {
      acc += 0.5 * mesh.width(l) * rule.weight(a) * nh(l, a) * tables.prefix(i, l, a);
    }
  }
  return -acc;
}

double interior_flux_at(const DGState& state, const Mesh& mesh, const QuadratureRule& rule,
                        const KernelSet& kernels, int j, double xstar) {
  if (j < 0 || j >= mesh.cells()) throw InvalidArgument("interior_flux_at: bad cell index");
  if (!(xstar > mesh.interface(j)) || xstar > mesh.interface(j + 1)) {
    throw InvalidArgument("interior_flux_at: x* outside cell");
  }
  const int q = rule.order();
  const Array2D gx = gauss_point_matrix(mesh, rule);
  const Array2D nh = values_at_gauss_points(state, mesh, rule);
  double total = 0.0;

  if (kernels.has_aggregation) {
    const AggCtx ctx{state, mesh, rule, kernels, gx, nh};
    double acc = 0.0;
    for (int l = 0; l < j; ++l) {
      for (int a = 0; a < q; ++a) {
        const double u = gx(l, a);
        acc += 0.5 * mesh.width(l) * rule.weight(a) * nh(l, a) * ctx.gamma(u, xstar - u);
      }
    }
    const double a0 = mesh.interface(j);
    if (xstar - a0 > kDegenerateWidth) {
      const double half = 0.5 * (xstar - a0), mid = 0.5 * (xstar + a0);
      for (int a = 0; a < q; ++a) {
        const double u = mid + half * rule.node(a);
        acc += half * rule.weight(a) * eval_state_in_cell(state, mesh, j, u) *
               ctx.gamma(u, xstar - u);
      }
    }
    total += acc;
  }

  if (kernels.has_breakage) {
    double acc = 0.0;
    const double oa = xstar, ob = mesh.interface(j + 1);
    if (ob - oa > kDegenerateWidth) {
      const double half = 0.5 * (ob - oa), mid = 0.5 * (oa + ob);
      for (int a = 0; a < q; ++a) {
        const double v = mid + half * rule.node(a);
        acc += half * rule.weight(a) * eval_state_in_cell(state, mesh, j, v) *
               breakage_prefix_at(mesh, rule, kernels, gx, j, xstar, v);
      }
    }
    for (int l = j + 1; l < mesh.cells(); ++l) {
      for (int a = 0; a < q; ++a) {
        acc += 0.5 * mesh.width(l) * rule.weight(a) * nh(l, a) *
               breakage_prefix_at(mesh, rule, kernels, gx, j, xstar, gx(l, a));
      }
    }
    total -= acc;
  }
  return total;
}

double interior_flux(const DGState& state, const Mesh& mesh, const QuadratureRule& rule,
                     const KernelSet& kernels, int j, int gauss_index) {
  if (gauss_index < 0 || gauss_index >= rule.order()) {
    throw InvalidArgument("interior_flux: bad gauss index");
  }
  const double xstar = mesh.midpoint(j) + 0.5 * mesh.width(j) * rule.node(gauss_index);
  return interior_flux_at(state, mesh, rule, kernels, j, xstar);
}

FluxDecomposition flux_difference_decomposition(const DGState& state, const Mesh& mesh,
                                                const QuadratureRule& rule,
                                                const KernelSet& kernels,
                                                const BreakageTables& tables, int j) {
  if (j < 0 || j >= mesh.cells()) {
    throw InvalidArgument("flux_difference_decomposition: bad cell index");
  }
  const int q = rule.order();
  FluxDecomposition out;
  out.death_agg.assign(q, 0.0);
  out.death_brk.assign(q, 0.0);
  const Array2D gx = gauss_point_matrix(mesh, rule);
  if (kernels.has_aggregation) {
    const Array2D nh = values_at_gauss_points(state, mesh, rule);
    const AggCtx ctx{state, mesh, rule, kernels, gx, nh};
    for (int a = 0; a < q; ++a) {
      const double u = gx(j, a);
      out.death_agg[a] = ctx.gamma(u, mesh.interface(j + 1) - u);
    }
    for (int l = 0; l < j; ++l) {
      for (int a = 0; a < q; ++a) {
        const double u = gx(l, a);
        const double lo = ctx.gamma(u, mesh.interface(j) - u);
        const double hi = ctx.gamma(u, mesh.interface(j + 1) - u);
        out.birth_agg += 0.5 * mesh.width(l) * rule.weight(a) * nh(l, a) * (lo - hi);
      }
    }
  }
  if (!tables.empty()) {
    for (int a = 0; a < q; ++a) out.death_brk[a] = tables.prefix(j, j, a);
  }
  return out;
}

}  // namespace pbedg
