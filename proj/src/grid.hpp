#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fracl1 {

// Uniform grid t_n = n*tau, n = 0..n_max, horizon T = n_max*tau.
struct UniformGrid {
  double tau = 0.0;
  std::size_t n_max = 0;

  double node(std::size_t n) const { return static_cast<double>(n) * tau; }
  double horizon() const { return node(n_max); }
};

inline UniformGrid make_uniform_grid(double tau, std::size_t n_max) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("make_uniform_grid: tau must be finite and positive");
  }
  if (n_max < 1) {
    throw std::invalid_argument("make_uniform_grid: n_max must be at least 1");
  }
  return UniformGrid{tau, n_max};
}

// Samples of a scalar function at the grid nodes; values[n] = y(t_n).
struct SampledFunction {
  UniformGrid grid;
  std::vector<double> values;
};

inline void validate_samples(const SampledFunction& samples, const char* where) {
  if (samples.values.size() != samples.grid.n_max + 1) {
    throw std::invalid_argument(std::string(where) +
                                ": values size must equal n_max + 1");
  }
  for (double v : samples.values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument(std::string(where) + ": values must be finite");
    }
  }
}

}  // namespace fracl1
