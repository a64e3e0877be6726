#pragma once

namespace pbedg {

// e^{-z} I_1(z) for z >= 0 without overflow: positive-term power series
// below z = 100, the large-argument asymptotic expansion above. Relative
// accuracy is near machine precision on both branches.
double bessel_i1_scaled(double z);

// Closed-form mass densities n(x, t) = x f(x, t) for the kernel cases with
// known solutions. All start from n0(x) = x e^{-x} except the
// multiplicative case, which starts from n0(x) = e^{-x}.

// Constant-kernel coagulation: n = x M^2 e^{-M x}, M = 2 / (2 + t).
double solution_const_agg(double x, double t);

// Additive-kernel coagulation, evaluated in log space through the scaled
// Bessel function so that large x and t are safe:
//   n = (1 - T) T^{-1/2} e^{-x (1 - sqrt(T))^2} e^{-z} I_1(z),
// with T = 1 - e^{-t} and z = 2 x sqrt(T).
double solution_sum_agg(double x, double t);

// Multiplicative-kernel coagulation, valid up to the gelation time t = 1
// (ValidityError beyond):
//   n = e^{-x (1 - sqrt(t))^2} e^{-z} I_1(z) / (x sqrt(t)), z = 2 x sqrt(t).
double solution_prod_agg(double x, double t);

// Binary breakage with linear selection: n = x (1 + t)^2 e^{-x (1 + t)}.
double solution_binlin_brk(double x, double t);

// Binary breakage with quadratic selection:
//   n = x e^{-x - t x^2} (1 + 2 t (1 + x)).
double solution_binquad_brk(double x, double t);

// Coupled coagulation-breakage at its steady state: n = x e^{-x} for all t.
double solution_coupled_steady(double x, double t);

// Closed-form number moments. The total mass M_1 is 1 for every case above.
double m0_const_agg(double t);     // 2 / (2 + t)
double m0_sum_agg(double t);       // e^{-t}
double m0_binlin_brk(double t);    // 1 + t
double m0_coupled_steady(double t);  // 1
double m2_prod_agg(double t);      // 1 / (1 - t), t < 1

}  // namespace pbedg
