#include "experiments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "errors.hpp"
#include "l1_scheme.hpp"

namespace fracl1 {

TestFunctionSpec split_kbeta(double v) {
  if (!(v > 0.0) || !(v <= 2.0) || !std::isfinite(v)) {
    throw std::invalid_argument("k + beta must lie in (0, 2]");
  }
  if (v <= 1.0) {
    return TestFunctionSpec{0, v};
  }
  return TestFunctionSpec{1, v - 1.0};
}

OrderTable order_table(const std::vector<double>& alphas,
                       const std::vector<double>& kbetas, double tau_base,
                       double horizon) {
  if (alphas.empty() || kbetas.empty()) {
    throw std::invalid_argument("order_table: empty alpha or k+beta list");
  }
  OrderTable table;
  table.alphas = alphas;
  table.kbetas = kbetas;
  table.tau_base = tau_base;
  table.horizon = horizon;
  table.cells.reserve(alphas.size() * kbetas.size());
  for (double alpha : alphas) {
    for (double v : kbetas) {
      const HolderFunction f = make_test_function(split_kbeta(v));
      try {
        table.cells.push_back(estimate_order(f, alpha, tau_base, horizon));
      } catch (const DegenerateDifferenceError&) {
        OrderEstimate cell;
        cell.estimated_order = std::numeric_limits<double>::quiet_NaN();
        cell.coarse_diff = std::numeric_limits<double>::quiet_NaN();
        cell.fine_diff = std::numeric_limits<double>::quiet_NaN();
        table.cells.push_back(cell);
      }
    }
  }
  return table;
}

BoundCheckCell bound_check_cell(const HolderFunction& f, double alpha,
                                double tau, const QuadratureConfig& cfg) {
  if (!(alpha > 0.0) || !(alpha < 1.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("tau must be positive");
  }
  if (!f.known_seminorm) {
    throw std::invalid_argument(
        "bound_check_cell needs a function with a known seminorm");
  }
  const double ratio_nodes = f.horizon / tau;
  const auto n_max = static_cast<std::size_t>(std::llround(ratio_nodes));
  if (n_max < 1 || std::fabs(static_cast<double>(n_max) * tau - f.horizon) >
                       1e-9 * f.horizon) {
    throw std::invalid_argument("tau must divide the function's horizon");
  }

  BoundCheckCell cell;
  // The bound only exists when the constant does: k = 0 needs beta > alpha.
  if (f.k == 0 && !(f.beta > alpha)) {
    return cell;
  }
  cell.applicable = true;

  const UniformGrid grid = make_uniform_grid(f.horizon / static_cast<double>(n_max),
                                             n_max);
  const SampledFunction samples = sample_on_grid(f, grid);
  const std::vector<double> l1 = l1_apply_all(samples, alpha, n_max);
  const double seminorm = *f.known_seminorm;

  double best_ratio = -1.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double reference = caputo_reference(f, alpha, grid.node(n), cfg).value;
    const double err = std::fabs(reference - l1[n - 1]);
    const ErrorConstantParams params{alpha, f.beta, f.k,
                                     static_cast<long long>(n)};
    const double bound = truncation_bound(params, seminorm, tau);
    double ratio;
    if (bound > 0.0) {
      ratio = err / bound;
    } else {
      ratio = err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    if (ratio > best_ratio) {
      best_ratio = ratio;
      cell.worst_node = n;
      cell.observed_error = err;
      cell.bound = bound;
      cell.ratio = ratio;
    }
  }
  return cell;
}

}  // namespace fracl1
