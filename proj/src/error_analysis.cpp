#include "error_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "errors.hpp"
#include "l1_scheme.hpp"
#include "special_functions.hpp"

namespace fracl1 {

namespace {

void validate_smoothness(double alpha, double beta, int k) {
  if (!(alpha > 0.0) || !(alpha < 1.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  if (k != 0 && k != 1) {
    throw std::invalid_argument("k must be 0 or 1");
  }
  if (!(beta >= 0.0) || !(beta <= 1.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("beta must lie in [0, 1]");
  }
}

}  // namespace

double error_constant(const ErrorConstantParams& params) {
  const double alpha = params.alpha;
  const double beta = params.beta;
  validate_smoothness(alpha, beta, params.k);
  if (params.n < 1) {
    throw std::invalid_argument("n must be at least 1");
  }
  const double ga1 = gamma_fn(1.0 - alpha);
  // 1 - n^(-alpha) without cancellation for large n or tiny alpha.
  const double one_minus_n_pow =
      -std::expm1(-alpha * std::log(static_cast<double>(params.n)));
  if (params.k == 0) {
    if (!(beta > alpha)) {
      throw std::domain_error(
          "k = 0 requires beta > alpha for a convergent bound");
    }
    return one_minus_n_pow / (std::pow(2.0, beta) * ga1) +
           alpha / (ga1 * (beta - alpha) * (1.0 + beta - alpha)) +
           alpha * gamma_fn(1.0 + beta) / gamma_fn(2.0 + beta - alpha);
  }
  return one_minus_n_pow / (4.0 * (beta + 1.0) * ga1) +
         alpha / gamma_fn(3.0 - alpha);
}

double truncation_bound(const ErrorConstantParams& params, double seminorm,
                        double tau) {
  if (!(seminorm >= 0.0) || !std::isfinite(seminorm)) {
    throw std::invalid_argument("seminorm must be finite and non-negative");
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("tau must be positive");
  }
  const double c = error_constant(params);
  const double rate = params.k + params.beta - params.alpha;
  return c * seminorm * std::pow(tau, rate);
}

double interpolation_bound(int k, double beta, double seminorm, double t,
                           double t_j, double tau) {
  validate_smoothness(0.5, beta, k);  // alpha is irrelevant here
  if (!(seminorm >= 0.0) || !std::isfinite(seminorm)) {
    throw std::invalid_argument("seminorm must be finite and non-negative");
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("tau must be positive");
  }
  const double d0 = t - t_j;        // distance to the left node
  const double d1 = t_j + tau - t;  // distance to the right node
  if (!(d0 >= 0.0) || !(d1 >= 0.0)) {
    throw std::invalid_argument("t must lie in [t_j, t_j + tau]");
  }
  if (k == 0) {
    if (beta == 0.0) {
      throw std::invalid_argument(
          "k = 0, beta = 0 needs a modulus of continuity; use "
          "interpolation_bound_modulus");
    }
    return (d0 * std::pow(d1, beta) + d1 * std::pow(d0, beta)) * seminorm / tau;
  }
  return d0 * d1 * std::pow(tau, beta - 1.0) * seminorm / (beta + 1.0);
}

double interpolation_bound_modulus(
    double t, double t_j, double tau,
    const std::function<double(double)>& modulus) {
  if (!modulus) {
    throw std::invalid_argument("modulus callback must be provided");
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("tau must be positive");
  }
  const double d0 = t - t_j;
  const double d1 = t_j + tau - t;
  if (!(d0 >= 0.0) || !(d1 >= 0.0)) {
    throw std::invalid_argument("t must lie in [t_j, t_j + tau]");
  }
  if (d0 == 0.0 || d1 == 0.0) {
    return 0.0;  // the interpolant matches y at the nodes
  }
  const double m0 = modulus(d1);
  const double m1 = modulus(d0);
  if (!std::isfinite(m0) || !std::isfinite(m1) || m0 < 0.0 || m1 < 0.0) {
    throw std::invalid_argument("modulus returned an invalid value");
  }
  return (d0 * m0 + d1 * m1) / tau;
}

double caputo_wellposed_bound(double alpha, double beta, double seminorm,
                              double t) {
  validate_smoothness(alpha, beta, 0);
  if (!(beta > alpha)) {
    throw std::domain_error("well-posedness needs beta > alpha");
  }
  if (!(seminorm >= 0.0) || !std::isfinite(seminorm)) {
    throw std::invalid_argument("seminorm must be finite and non-negative");
  }
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("t must be positive");
  }
  return seminorm * std::pow(t, beta - alpha) *
         (1.0 + alpha / (beta - alpha)) / gamma_fn(1.0 - alpha);
}

double asymptotic_optimal_constant(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  return -riemann_zeta(alpha - 1.0) / gamma_fn(2.0 - alpha);
}

OrderEstimate estimate_order(const HolderFunction& f, double alpha,
                             double tau_base, double horizon) {
  if (!(alpha > 0.0) || !(alpha < 1.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  if (!(tau_base > 0.0) || !(horizon > 0.0) || !std::isfinite(tau_base) ||
      !std::isfinite(horizon)) {
    throw std::invalid_argument("tau_base and horizon must be positive");
  }
  if (horizon > f.horizon * (1.0 + 1e-12)) {
    throw std::invalid_argument("horizon exceeds the function's domain");
  }
  const double ratio = horizon / tau_base;
  const auto n_base = static_cast<std::size_t>(std::llround(ratio));
  if (n_base < 1 || std::fabs(static_cast<double>(n_base) * tau_base -
                              horizon) > 1e-9 * horizon) {
    throw std::invalid_argument("horizon must be an integer multiple of tau_base");
  }

  std::vector<std::vector<double>> levels;
  levels.reserve(3);
  for (int level = 0; level < 3; ++level) {
    const std::size_t n = n_base << level;
    const UniformGrid grid = make_uniform_grid(horizon / static_cast<double>(n), n);
    const SampledFunction samples = sample_on_grid(f, grid);
    levels.push_back(l1_apply_all(samples, alpha, n));
  }

  // Each pair of grids is compared on their shared nodes, i.e. the nodes of
  // the coarser grid in the pair.
  double coarse = 0.0;
  double fine = 0.0;
  for (std::size_t n = 1; n <= n_base; ++n) {
    coarse = std::max(coarse,
                      std::fabs(levels[0][n - 1] - levels[1][2 * n - 1]));
  }
  for (std::size_t m = 1; m <= 2 * n_base; ++m) {
    fine = std::max(fine,
                    std::fabs(levels[1][m - 1] - levels[2][2 * m - 1]));
  }
  if (coarse < 1e-14 || fine < 1e-14) {
    throw DegenerateDifferenceError(
        "successive L1 differences are at rounding level; no order to measure");
  }
  return {std::log2(coarse / fine), coarse, fine};
}

}  // namespace fracl1
