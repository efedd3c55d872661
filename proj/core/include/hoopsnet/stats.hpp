#pragma once

// Tail probabilities needed for the regression statistics.

namespace hoopsnet {

// Upper tail of the standard normal, 1 - Phi(z). Relative error well below
// 1e-12 for |z| <= 8 (erfc based).
double normal_sf(double z);

// Regularized upper incomplete gamma Q(a, x), a > 0, x >= 0. Series for
// x < a + 1, continued fraction otherwise; relative error <= 1e-10 over the
// ranges used here.
double regularized_gamma_q(double a, double x);

// Upper tail of the chi-square distribution with df degrees of freedom:
// Q(df/2, x/2).
double chi_square_sf(double x, int df);

}  // namespace hoopsnet
