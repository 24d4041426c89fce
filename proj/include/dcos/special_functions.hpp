#pragma once

namespace dcos {

// Survival functions backing the diagnostic p-values. All are stateless,
// reentrant, and accurate to ~1e-12 over the documented ranges.

// Upper regularized incomplete gamma Q(a, x), a > 0, x >= 0.
double regularized_gamma_q(double a, double x);

// Regularized incomplete beta I_x(a, b), 0 <= x <= 1, a, b > 0.
double regularized_beta(double a, double b, double x);

// Chi-squared survival P(X >= x) with dof degrees of freedom.
double chi2_sf(double x, int dof);

// Asymptotic Kolmogorov survival of sqrt(n)*d: 2*sum_k (-1)^{k-1} exp(-2 k^2 t^2),
// the series truncated once terms drop below 1e-12. d is the KS statistic of a
// sample of size n.
double kolmogorov_sf(double d, long long n);

// Two-sided Student-t tail probability P(|T| >= t) with dof degrees of freedom.
double t_sf_two_sided(double t, int dof);

}  // namespace dcos
