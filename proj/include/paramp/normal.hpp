#pragma once

namespace paramp {

double normal_pdf(double x);

/// Standard normal CDF via erfc (accurate in both tails).
double normal_cdf(double x);

/// P(Z1 <= h, Z2 <= k) for standard bivariate normal with correlation rho.
/// 1-D adaptive Gauss-Kronrod quadrature of the conditional-Gaussian CDF,
/// absolute tolerance ~1e-11; |rho| >= 1 - 1e-12 handled as the degenerate limit.
double bivariate_normal_cdf(double h, double k, double rho);

} // namespace paramp
