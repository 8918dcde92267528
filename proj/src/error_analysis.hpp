#pragma once

#include <functional>

#include "holder.hpp"

namespace fracl1 {

// Parameters of the L1 truncation-error constant C(alpha, beta, k, n).
struct ErrorConstantParams {
  double alpha = 0.5;  // fractional order, in (0, 1)
  double beta = 1.0;   // Holder exponent of y^(k), in [0, 1]
  int k = 1;           // smoothness level, 0 or 1
  long long n = 1;     // node index the bound is evaluated at, >= 1
};

// Constant in the pointwise truncation bound
//   |D^alpha y(t_n) - delta^alpha_tau y(t_n)| <= C [y^(k)]_beta tau^(k+beta-alpha).
// k = 0 requires beta > alpha (otherwise the scheme need not converge and the
// constant is undefined); k = 1 is valid for every beta in [0, 1].
double error_constant(const ErrorConstantParams& params);

// The full right-hand side C [y^(k)]_beta tau^(k+beta-alpha).
double truncation_bound(const ErrorConstantParams& params, double seminorm,
                        double tau);

// Pointwise bound on |y(t) - (I_tau y)(t)| for t in [t_j, t_j + tau], where
// I_tau is the piecewise-linear interpolant on a grid of step tau:
//   k = 0, beta in (0, 1]: ((t-t_j)(t_{j+1}-t)^beta + (t_{j+1}-t)(t-t_j)^beta) s / tau
//   k = 1, beta in [0, 1]: (t-t_j)(t_{j+1}-t) tau^(beta-1) s / (beta+1)
// with s = [y^(k)]_beta.  The pair k = 0, beta = 0 carries no rate information
// through the seminorm; use interpolation_bound_modulus instead.
double interpolation_bound(int k, double beta, double seminorm, double t,
                           double t_j, double tau);

// Continuous-function variant of the bound above, driven by the modulus of
// continuity Lambda of y:
//   ((t-t_j) Lambda(t_{j+1}-t) + (t_{j+1}-t) Lambda(t-t_j)) / tau.
double interpolation_bound_modulus(double t, double t_j, double tau,
                                   const std::function<double(double)>& modulus);

// A-priori bound for y in C^{0,beta}, beta > alpha:
//   |D^alpha y(t)| <= [y]_beta t^(beta-alpha) (1 + alpha/(beta-alpha)) / Gamma(1-alpha).
double caputo_wellposed_bound(double alpha, double beta, double seminorm,
                              double t);

// Sharp large-n limit of the best possible constant for k = 1, beta = 1:
//   -zeta(alpha - 1) / Gamma(2 - alpha).
double asymptotic_optimal_constant(double alpha);

// Observed convergence order from three nested grids tau, tau/2, tau/4:
//   order = log2(coarse_diff / fine_diff),
// where coarse_diff and fine_diff are max-norm differences of successive L1
// evaluations, each taken over the shared nodes of its grid pair (the nodes
// of the coarser grid in the pair) in (0, horizon].
struct OrderEstimate {
  double estimated_order = 0.0;
  double coarse_diff = 0.0;
  double fine_diff = 0.0;
};

// Throws DegenerateDifferenceError when either successive difference falls
// below 1e-14 (the ratio would measure rounding noise, not a rate).
OrderEstimate estimate_order(const HolderFunction& f, double alpha,
                             double tau_base, double horizon);

}  // namespace fracl1
