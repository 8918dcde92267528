#pragma once

#include <cstddef>

#include "grid.hpp"
#include "holder.hpp"

namespace fracl1 {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int nodes_per_panel = 16;  // Gauss-Legendre points per panel
  int max_panel_depth = 52;  // dyadic refinement cap toward the singularity
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

// High-accuracy Caputo derivative of order alpha at t in (0, f.horizon].
//
// Route selection:
//  - power-kink functions (the test family) use an exact decomposition of the
//    singular integral: closed forms via Gamma/Beta plus one nonsingular
//    adaptive quadrature;
//  - functions with an analytic derivative integrate the y'-form kernel
//    y'(s) (t-s)^(-alpha) with dyadic panels and an analytic tail completion;
//  - everything else integrates the derivative-free form with dyadic panels,
//    a geometric panel-tail bound, and a rounding-noise term in the estimate.
//
// Throws NoConvergenceError when the tolerance cannot be certified (including
// ill-posed requests with k + beta <= alpha).
QuadratureResult caputo_reference(const HolderFunction& f, double alpha,
                                  double t, const QuadratureConfig& cfg = {});

// Exact Caputo derivative of the piecewise-linear interpolant of the samples
// at node n; per-interval antiderivatives, no quadrature. Agrees with
// l1_apply up to rounding.
double caputo_of_interpolant(const SampledFunction& samples, double alpha,
                             std::size_t n);

}  // namespace fracl1
