#include "fracl1.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <new>
#include <stdexcept>
#include <vector>

#include "caputo_oracle.hpp"
#include "error_analysis.hpp"
#include "errors.hpp"
#include "experiments.hpp"
#include "grid.hpp"
#include "holder.hpp"
#include "l1_scheme.hpp"
#include "special_functions.hpp"

struct fracl1_function {
  fracl1::HolderFunction impl;
};

namespace {

template <typename Fn>
fracl1_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return FRACL1_OK;
  } catch (const fracl1::NoConvergenceError&) {
    return FRACL1_ERR_NO_CONVERGENCE;
  } catch (const fracl1::DegenerateDifferenceError&) {
    return FRACL1_ERR_DEGENERATE;
  } catch (const std::domain_error&) {
    return FRACL1_ERR_DOMAIN;
  } catch (const std::invalid_argument&) {
    return FRACL1_ERR_INVALID_ARGUMENT;
  } catch (...) {
    return FRACL1_ERR_INTERNAL;
  }
}

fracl1::SampledFunction pack_samples(const double* values, size_t count,
                                     double tau) {
  if (values == nullptr) {
    throw std::invalid_argument("values must not be NULL");
  }
  if (count < 2) {
    throw std::invalid_argument("count must be at least 2");
  }
  fracl1::SampledFunction samples;
  samples.grid = fracl1::make_uniform_grid(tau, count - 1);
  samples.values.assign(values, values + count);
  fracl1::validate_samples(samples, "fracl1");
  return samples;
}

fracl1::QuadratureConfig unpack_config(const fracl1_quad_config* cfg) {
  fracl1::QuadratureConfig out;
  if (cfg != nullptr) {
    out.abs_tol = cfg->abs_tol;
    out.rel_tol = cfg->rel_tol;
    out.nodes_per_panel = cfg->nodes_per_panel;
    out.max_panel_depth = cfg->max_panel_depth;
  }
  return out;
}

void require(bool ok) {
  if (!ok) throw std::invalid_argument("invalid argument");
}

}  // namespace

extern "C" {

const char* fracl1_status_message(fracl1_status status) {
  switch (status) {
    case FRACL1_OK:
      return "ok";
    case FRACL1_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case FRACL1_ERR_DOMAIN:
      return "argument outside the function's domain";
    case FRACL1_ERR_NO_CONVERGENCE:
      return "quadrature tolerance not reachable";
    case FRACL1_ERR_DEGENERATE:
      return "nested-grid differences below noise level";
    case FRACL1_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* fracl1_version(void) { return "0.1.0"; }

fracl1_status fracl1_gamma(double x, double* out) {
  return guarded([&] {
    require(out != nullptr);
    *out = fracl1::gamma_fn(x);
  });
}

fracl1_status fracl1_riemann_zeta(double s, double* out) {
  return guarded([&] {
    require(out != nullptr);
    *out = fracl1::riemann_zeta(s);
  });
}

fracl1_status fracl1_weights(double alpha, size_t count, double* out) {
  return guarded([&] {
    require(out != nullptr);
    const fracl1::L1Weights w = fracl1::l1_weights(alpha, count);
    std::copy(w.b.begin(), w.b.end(), out);
  });
}

fracl1_status fracl1_l1_apply(const double* values, size_t count, double tau,
                              double alpha, size_t n, double* out) {
  return guarded([&] {
    require(out != nullptr);
    *out = fracl1::l1_apply(pack_samples(values, count, tau), alpha, n);
  });
}

fracl1_status fracl1_l1_apply_all(const double* values, size_t count,
                                  double tau, double alpha, double* out) {
  return guarded([&] {
    require(out != nullptr);
    const std::vector<double> all =
        fracl1::l1_apply_all(pack_samples(values, count, tau), alpha);
    std::copy(all.begin(), all.end(), out);
  });
}

fracl1_status fracl1_interpolate(const double* values, size_t count, double tau,
                                 double t, double* out) {
  return guarded([&] {
    require(out != nullptr);
    *out = fracl1::interpolate(pack_samples(values, count, tau), t);
  });
}

fracl1_status fracl1_caputo_of_interpolant(const double* values, size_t count,
                                           double tau, double alpha, size_t n,
                                           double* out) {
  return guarded([&] {
    require(out != nullptr);
    *out = fracl1::caputo_of_interpolant(pack_samples(values, count, tau),
                                         alpha, n);
  });
}

fracl1_function* fracl1_function_new_test(int k, double beta) {
  try {
    auto* handle = new fracl1_function;
    handle->impl = fracl1::make_test_function(fracl1::TestFunctionSpec{k, beta});
    return handle;
  } catch (...) {
    return nullptr;
  }
}

fracl1_function* fracl1_function_new_callback(fracl1_eval_fn eval,
                                              fracl1_eval_fn deriv, void* user,
                                              double horizon, int k,
                                              double beta, double seminorm) {
  if (eval == nullptr || !(horizon > 0.0) || !std::isfinite(horizon) ||
      (k != 0 && k != 1) || !(beta >= 0.0 && beta <= 1.0) ||
      !std::isfinite(beta) ||
      (seminorm >= 0.0 && !std::isfinite(seminorm))) {
    return nullptr;
  }
  try {
    auto* handle = new fracl1_function;
    fracl1::HolderFunction& f = handle->impl;
    f.eval = [eval, user](double t) { return eval(t, user); };
    if (deriv != nullptr) {
      f.derivative = [deriv, user](double t) { return deriv(t, user); };
    }
    f.horizon = horizon;
    f.k = k;
    f.beta = beta;
    if (seminorm >= 0.0) {
      f.known_seminorm = seminorm;
    }
    return handle;
  } catch (...) {
    return nullptr;
  }
}

void fracl1_function_free(fracl1_function* f) { delete f; }

fracl1_status fracl1_function_eval(const fracl1_function* f, double t,
                                   double* out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr);
    if (!(t >= 0.0 && t <= f->impl.horizon)) {
      throw std::domain_error("t must lie in [0, horizon]");
    }
    *out = f->impl.eval(t);
  });
}

fracl1_status fracl1_function_info(const fracl1_function* f, int* k,
                                   double* beta, double* horizon,
                                   int* has_seminorm, double* seminorm) {
  return guarded([&] {
    require(f != nullptr);
    if (k != nullptr) *k = f->impl.k;
    if (beta != nullptr) *beta = f->impl.beta;
    if (horizon != nullptr) *horizon = f->impl.horizon;
    if (has_seminorm != nullptr) {
      *has_seminorm = f->impl.known_seminorm.has_value() ? 1 : 0;
    }
    if (seminorm != nullptr) {
      *seminorm = f->impl.known_seminorm.value_or(
          std::numeric_limits<double>::quiet_NaN());
    }
  });
}

fracl1_status fracl1_modulus_of_continuity(const fracl1_function* f,
                                           double delta,
                                           int samples_per_interval,
                                           double* out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr);
    *out = fracl1::modulus_of_continuity(f->impl, delta, samples_per_interval);
  });
}

fracl1_status fracl1_holder_seminorm(const fracl1_function* f, double beta,
                                     int pair_samples, double* out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr);
    *out = fracl1::holder_seminorm(f->impl, beta, pair_samples);
  });
}

void fracl1_quad_config_init(fracl1_quad_config* cfg) {
  if (cfg == nullptr) return;
  const fracl1::QuadratureConfig defaults;
  cfg->abs_tol = defaults.abs_tol;
  cfg->rel_tol = defaults.rel_tol;
  cfg->nodes_per_panel = defaults.nodes_per_panel;
  cfg->max_panel_depth = defaults.max_panel_depth;
}

fracl1_status fracl1_caputo_reference(const fracl1_function* f, double alpha,
                                      double t, const fracl1_quad_config* cfg,
                                      double* out, double* err_estimate) {
  return guarded([&] {
    require(f != nullptr && out != nullptr);
    const fracl1::QuadratureResult res =
        fracl1::caputo_reference(f->impl, alpha, t, unpack_config(cfg));
    *out = res.value;
    if (err_estimate != nullptr) *err_estimate = res.error_estimate;
  });
}

fracl1_status fracl1_error_constant(double alpha, double beta, int k,
                                    unsigned long long n, double* out) {
  return guarded([&] {
    require(out != nullptr);
    require(n <= static_cast<unsigned long long>(
                     std::numeric_limits<long long>::max()));
    const fracl1::ErrorConstantParams params{alpha, beta, k,
                                             static_cast<long long>(n)};
    *out = fracl1::error_constant(params);
  });
}

fracl1_status fracl1_truncation_bound(double alpha, double beta, int k,
                                      unsigned long long n, double tau,
                                      double seminorm, double* out) {
  return guarded([&] {
    require(out != nullptr);
    require(n <= static_cast<unsigned long long>(
                     std::numeric_limits<long long>::max()));
    const fracl1::ErrorConstantParams params{alpha, beta, k,
                                             static_cast<long long>(n)};
    *out = fracl1::truncation_bound(params, seminorm, tau);
  });
}

fracl1_status fracl1_interpolation_bound(int k, double beta, double t,
                                         double t_j, double tau, double weight,
                                         double* out) {
  return guarded([&] {
    require(out != nullptr);
    *out = fracl1::interpolation_bound(k, beta, weight, t, t_j, tau);
  });
}

fracl1_status fracl1_interpolation_bound_modulus(double t, double t_j,
                                                 double tau,
                                                 fracl1_eval_fn modulus,
                                                 void* user, double* out) {
  return guarded([&] {
    require(out != nullptr && modulus != nullptr);
    *out = fracl1::interpolation_bound_modulus(
        t, t_j, tau,
        [modulus, user](double delta) { return modulus(delta, user); });
  });
}

fracl1_status fracl1_caputo_wellposed_bound(double alpha, double beta, double t,
                                            double seminorm, double* out) {
  return guarded([&] {
    require(out != nullptr);
    *out = fracl1::caputo_wellposed_bound(alpha, beta, seminorm, t);
  });
}

fracl1_status fracl1_asymptotic_optimal_constant(double alpha, double* out) {
  return guarded([&] {
    require(out != nullptr);
    *out = fracl1::asymptotic_optimal_constant(alpha);
  });
}

fracl1_status fracl1_estimate_order(const fracl1_function* f, double alpha,
                                    double tau_base, double horizon,
                                    fracl1_order_estimate* out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr);
    const fracl1::OrderEstimate est =
        fracl1::estimate_order(f->impl, alpha, tau_base, horizon);
    out->estimated_order = est.estimated_order;
    out->coarse_diff = est.coarse_diff;
    out->fine_diff = est.fine_diff;
  });
}

fracl1_status fracl1_order_table(const double* alphas, size_t n_alphas,
                                 const double* kbetas, size_t n_kbetas,
                                 double tau_base, double horizon,
                                 fracl1_order_estimate* cells) {
  return guarded([&] {
    require(alphas != nullptr && kbetas != nullptr && cells != nullptr);
    require(n_alphas > 0 && n_kbetas > 0);
    const fracl1::OrderTable table = fracl1::order_table(
        std::vector<double>(alphas, alphas + n_alphas),
        std::vector<double>(kbetas, kbetas + n_kbetas), tau_base, horizon);
    for (size_t i = 0; i < table.cells.size(); ++i) {
      cells[i].estimated_order = table.cells[i].estimated_order;
      cells[i].coarse_diff = table.cells[i].coarse_diff;
      cells[i].fine_diff = table.cells[i].fine_diff;
    }
  });
}

fracl1_status fracl1_bound_check_cell(const fracl1_function* f, double alpha,
                                      double tau, const fracl1_quad_config* cfg,
                                      fracl1_bound_check_result* out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr);
    const fracl1::BoundCheckCell cell =
        fracl1::bound_check_cell(f->impl, alpha, tau, unpack_config(cfg));
    out->applicable = cell.applicable ? 1 : 0;
    out->worst_node = cell.worst_node;
    out->observed_error = cell.observed_error;
    out->bound = cell.bound;
    out->ratio = cell.ratio;
  });
}

}  // extern "C"
