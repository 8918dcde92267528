#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "grid.hpp"

namespace fracl1 {

// Marks a function of the exact form scale * (t - center)^k |t - center|^beta,
// enabling the semi-analytic quadrature path in caputo_reference.
struct PowerKink {
  double center = 0.5;
  double scale = 1.0;
};

// A scalar function on [0, horizon] with the smoothness metadata the error
// analysis consumes: y is C^{k,beta} with seminorm [y^(k)]_beta when known.
struct HolderFunction {
  std::function<double(double)> eval;
  int k = 0;              // 0 or 1
  double beta = 0.0;      // in [0, 1]
  double horizon = 1.0;   // domain is [0, horizon]
  std::optional<double> known_seminorm;            // seminorm of y^(k)
  std::function<double(double)> derivative;        // optional analytic y'
  std::vector<double> kinks;                       // interior non-smooth points
  std::optional<PowerKink> power_kink;
};

// The kink test family y(t) = (t - 1/2)^k |t - 1/2|^beta on [0, 1].
struct TestFunctionSpec {
  int k = 0;          // 0 or 1
  double beta = 1.0;  // in (0, 1]
};

// Evaluate the test family member; spec is validated, t is not restricted
// (the formula is total).
double y_test(const TestFunctionSpec& spec, double t);

// Package the test family member with exact metadata: seminorm 1 for k = 0 and
// 1 + beta for k = 1 (validated against brute-force pair sampling in tests),
// analytic derivative for k = 1, kink at 1/2, and the power-kink marker.
HolderFunction make_test_function(const TestFunctionSpec& spec);

// Lower estimate of the modulus of continuity sup{|y(t)-y(s)| : |t-s| <= delta}
// over [0, horizon], from a deterministic grid with samples_per_interval >= 2
// points per delta-interval plus kink-straddling pairs.
double modulus_of_continuity(const HolderFunction& f, double delta,
                             int samples_per_interval);

// Lower estimate of the Holder seminorm sup |y(t)-y(s)|/|t-s|^beta from a
// uniform pair grid (pair_samples points) plus geometric separations 2^-j
// straddling and touching each kink and the endpoints.
double holder_seminorm(const HolderFunction& f, double beta, int pair_samples);

// Convenience: sample f at the grid nodes.
SampledFunction sample_on_grid(const HolderFunction& f, const UniformGrid& grid);

}  // namespace fracl1
