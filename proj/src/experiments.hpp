#pragma once

#include <cstddef>
#include <vector>

#include "caputo_oracle.hpp"
#include "error_analysis.hpp"
#include "holder.hpp"

namespace fracl1 {

// Decode a combined smoothness value v = k + beta into the test-family spec:
// v in (0, 1] means (k, beta) = (0, v); v in (1, 2] means (1, v - 1).
TestFunctionSpec split_kbeta(double v);

// Empirical convergence orders of the L1 scheme over the kink test family,
// one cell per (alpha, k+beta) pair, rows indexed by alpha.
struct OrderTable {
  std::vector<double> alphas;
  std::vector<double> kbetas;
  double tau_base = 0.0;
  double horizon = 0.0;
  // Row-major, alphas.size() x kbetas.size(). Degenerate cells (differences at
  // rounding level) carry estimated_order = NaN instead of aborting the table.
  std::vector<OrderEstimate> cells;
};

OrderTable order_table(const std::vector<double>& alphas,
                       const std::vector<double>& kbetas, double tau_base,
                       double horizon);

// Worst node of a truncation-bound comparison on one (function, alpha, tau)
// cell: the L1 value against the quadrature reference at every grid node,
// each measured against the pointwise bound C [y^(k)]_beta tau^(k+beta-alpha).
struct BoundCheckCell {
  bool applicable = false;  // false when the bound's hypothesis excludes the cell
  std::size_t worst_node = 0;
  double observed_error = 0.0;
  double bound = 0.0;
  double ratio = 0.0;  // observed/bound at the worst node; 0 when both vanish
};

// Requires f.known_seminorm. tau must divide f.horizon into >= 1 intervals.
BoundCheckCell bound_check_cell(const HolderFunction& f, double alpha,
                                double tau, const QuadratureConfig& cfg);

}  // namespace fracl1
