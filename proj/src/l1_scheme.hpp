#pragma once

#include <cstddef>
#include <vector>

#include "grid.hpp"

namespace fracl1 {

// Direct O(N^2) evaluation limit for l1_apply_all.
inline constexpr std::size_t kApplyAllNodeCap = std::size_t{1} << 14;

// L1 convolution weights b_i = (i+1)^(1-alpha) - i^(1-alpha), i = 0..count-1.
// b_0 = 1 exactly; the sequence decreases strictly and telescopes to m^(1-alpha).
struct L1Weights {
  double alpha = 0.0;
  std::vector<double> b;
};

L1Weights l1_weights(double alpha, std::size_t count);

// L1 approximation of the Caputo derivative of order alpha at node n:
//   tau^(-alpha)/Gamma(2-alpha) * sum_{j=0}^{n-1} b_j (y_{n-j} - y_{n-j-1}).
// n = 0 is an error (the scheme needs at least one backward difference).
double l1_apply(const SampledFunction& samples, double alpha, std::size_t n);

// L1 approximation at every node 1..n_max; entry n-1 corresponds to t_n.
// Bit-for-bit identical to calling l1_apply node by node.
std::vector<double> l1_apply_all(const SampledFunction& samples, double alpha,
                                 std::size_t max_nodes = kApplyAllNodeCap);

// Piecewise-linear interpolant through the samples, left-interval convention:
// t in [t_j, t_{j+1}) uses segment j; t = horizon uses the last segment.
double interpolate(const SampledFunction& samples, double t);

}  // namespace fracl1
