#pragma once

namespace fracl1 {

// Gamma function for x > 0. Lanczos approximation (g = 7, 9 coefficients);
// relative error is a few ulp over the range this library uses (0, 3].
// Throws std::domain_error for x <= 0 or non-finite x.
double gamma_fn(double x);

// Riemann zeta on the open interval (-1, 0), via the reflection formula
// zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s) with zeta(1-s)
// evaluated through the accelerated alternating (Dirichlet eta) series.
// Throws std::domain_error outside (-1, 0).
double riemann_zeta(double s);

}  // namespace fracl1
