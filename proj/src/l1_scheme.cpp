#include "l1_scheme.hpp"

#include <cmath>
#include <stdexcept>

#include "special_functions.hpp"

namespace fracl1 {

namespace {

void validate_alpha(double alpha, const char* where) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument(std::string(where) + ": alpha must lie in (0, 1)");
  }
}

// Shared summation kernel so l1_apply and l1_apply_all agree bit for bit.
double weighted_differences(const std::vector<double>& values,
                            const std::vector<double>& b, double scale,
                            std::size_t n) {
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    acc += b[j] * (values[n - j] - values[n - j - 1]);
  }
  return scale * acc;
}

}  // namespace

L1Weights l1_weights(double alpha, std::size_t count) {
  validate_alpha(alpha, "l1_weights");
  if (count == 0) {
    throw std::invalid_argument("l1_weights: count must be positive");
  }
  L1Weights w;
  w.alpha = alpha;
  w.b.resize(count);
  w.b[0] = 1.0;
  const double p = 1.0 - alpha;
  for (std::size_t i = 1; i < count; ++i) {
    // (i+1)^p - i^p = (i+1)^p * (1 - (i/(i+1))^p), with the parenthesized
    // factor evaluated through expm1/log1p to avoid cancellation.
    const double ip1 = static_cast<double>(i + 1);
    w.b[i] = std::pow(ip1, p) * (-std::expm1(p * std::log1p(-1.0 / ip1)));
  }
  return w;
}

double l1_apply(const SampledFunction& samples, double alpha, std::size_t n) {
  validate_alpha(alpha, "l1_apply");
  validate_samples(samples, "l1_apply");
  if (n < 1 || n > samples.grid.n_max) {
    throw std::invalid_argument("l1_apply: node index must lie in [1, n_max]");
  }
  const L1Weights w = l1_weights(alpha, n);
  const double scale =
      std::pow(samples.grid.tau, -alpha) / gamma_fn(2.0 - alpha);
  return weighted_differences(samples.values, w.b, scale, n);
}

std::vector<double> l1_apply_all(const SampledFunction& samples, double alpha,
                                 std::size_t max_nodes) {
  validate_alpha(alpha, "l1_apply_all");
  validate_samples(samples, "l1_apply_all");
  const std::size_t n_max = samples.grid.n_max;
  if (n_max > max_nodes) {
    throw std::invalid_argument(
        "l1_apply_all: grid exceeds the direct-evaluation node cap");
  }
  const L1Weights w = l1_weights(alpha, n_max);
  const double scale =
      std::pow(samples.grid.tau, -alpha) / gamma_fn(2.0 - alpha);
  std::vector<double> out(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    out[n - 1] = weighted_differences(samples.values, w.b, scale, n);
  }
  return out;
}

double interpolate(const SampledFunction& samples, double t) {
  validate_samples(samples, "interpolate");
  const double T = samples.grid.horizon();
  if (!(t >= 0.0 && t <= T)) {
    throw std::domain_error("interpolate: t outside [0, horizon]");
  }
  std::size_t j = static_cast<std::size_t>(t / samples.grid.tau);
  if (j >= samples.grid.n_max) j = samples.grid.n_max - 1;  // t == horizon
  const double tj = samples.grid.node(j);
  const double lambda = (t - tj) / samples.grid.tau;
  return samples.values[j] + lambda * (samples.values[j + 1] - samples.values[j]);
}

}  // namespace fracl1
