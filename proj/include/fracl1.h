#ifndef FRACL1_H
#define FRACL1_H

/* fracl1: L1 discretization of the Caputo fractional derivative on uniform
 * grids, with Holder-space truncation-error bounds, a high-accuracy quadrature
 * reference, and an empirical convergence-order harness.
 *
 * All functions return a status code; results travel through out-parameters.
 * The only opaque handle is fracl1_function, which owns a scalar function on
 * [0, horizon] together with its smoothness metadata.
 */

#include <stddef.h>

#if defined(_WIN32)
#define FRACL1_API __declspec(dllexport)
#else
#define FRACL1_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fracl1_status {
  FRACL1_OK = 0,
  FRACL1_ERR_INVALID_ARGUMENT = 1, /* malformed input (sizes, ranges, NaN) */
  FRACL1_ERR_DOMAIN = 2,           /* argument outside a function's domain */
  FRACL1_ERR_NO_CONVERGENCE = 3,   /* quadrature tolerance not reachable */
  FRACL1_ERR_DEGENERATE = 4,       /* nested-grid differences below noise */
  FRACL1_ERR_INTERNAL = 5
} fracl1_status;

FRACL1_API const char *fracl1_status_message(fracl1_status status);
FRACL1_API const char *fracl1_version(void);

/* ---------- special functions ---------- */

/* Gamma function for x > 0 (Lanczos approximation). */
FRACL1_API fracl1_status fracl1_gamma(double x, double *out);

/* Riemann zeta on the open interval (-1, 0), via the reflection formula. */
FRACL1_API fracl1_status fracl1_riemann_zeta(double s, double *out);

/* ---------- L1 scheme on uniform grids ----------
 *
 * A sampled function is passed as `values[0..count-1]` holding y(0), y(tau),
 * ..., y((count-1)*tau); count must be >= 2. Node index n refers to t_n = n*tau.
 */

/* L1 convolution weights b_i = (i+1)^(1-alpha) - i^(1-alpha), i = 0..count-1. */
FRACL1_API fracl1_status fracl1_weights(double alpha, size_t count, double *out);

/* L1 approximation of the Caputo derivative of order alpha at node n >= 1. */
FRACL1_API fracl1_status fracl1_l1_apply(const double *values, size_t count,
                                         double tau, double alpha, size_t n,
                                         double *out);

/* L1 approximation at every node 1..count-1; out has count-1 entries.
 * Direct O(N^2) evaluation, capped at 2^14 nodes. */
FRACL1_API fracl1_status fracl1_l1_apply_all(const double *values, size_t count,
                                             double tau, double alpha,
                                             double *out);

/* Piecewise-linear interpolant of the samples at t in [0, (count-1)*tau]. */
FRACL1_API fracl1_status fracl1_interpolate(const double *values, size_t count,
                                            double tau, double t, double *out);

/* Exact Caputo derivative of the piecewise-linear interpolant at node n.
 * Equals fracl1_l1_apply up to rounding (closed-form per-interval integrals). */
FRACL1_API fracl1_status fracl1_caputo_of_interpolant(const double *values,
                                                      size_t count, double tau,
                                                      double alpha, size_t n,
                                                      double *out);

/* ---------- Holder functions (opaque handle) ---------- */

typedef struct fracl1_function fracl1_function;
typedef double (*fracl1_eval_fn)(double t, void *user);

/* The built-in kink test family y(t) = (t - 1/2)^k |t - 1/2|^beta on [0, 1],
 * k in {0, 1}, beta in (0, 1]. Carries its exact seminorm (1 for k = 0,
 * 1 + beta for k = 1) and, for k = 1, an analytic derivative.
 * Returns NULL on invalid (k, beta). */
FRACL1_API fracl1_function *fracl1_function_new_test(int k, double beta);

/* Wrap a user callback on [0, horizon]. `deriv` may be NULL; when present it
 * enables the derivative-form quadrature path. `seminorm` is the Holder
 * seminorm of y^(k) when known, or a negative value when unknown.
 * Returns NULL on invalid metadata. */
FRACL1_API fracl1_function *fracl1_function_new_callback(
    fracl1_eval_fn eval, fracl1_eval_fn deriv, void *user, double horizon,
    int k, double beta, double seminorm);

FRACL1_API void fracl1_function_free(fracl1_function *f);

FRACL1_API fracl1_status fracl1_function_eval(const fracl1_function *f,
                                              double t, double *out);

/* Any out-pointer may be NULL. has_seminorm is 0/1. */
FRACL1_API fracl1_status fracl1_function_info(const fracl1_function *f, int *k,
                                              double *beta, double *horizon,
                                              int *has_seminorm,
                                              double *seminorm);

/* Lower estimate of the modulus of continuity sup |y(t)-y(s)|, |t-s| <= delta,
 * from a deterministic sample grid (at least samples_per_interval points per
 * delta-interval, plus kink-straddling pairs). */
FRACL1_API fracl1_status fracl1_modulus_of_continuity(const fracl1_function *f,
                                                      double delta,
                                                      int samples_per_interval,
                                                      double *out);

/* Lower estimate of the Holder seminorm [y]_{C^{0,beta}} from uniform pair
 * grids plus geometric separations around kinks; pair_samples sizes the
 * uniform grid. */
FRACL1_API fracl1_status fracl1_holder_seminorm(const fracl1_function *f,
                                                double beta, int pair_samples,
                                                double *out);

/* ---------- quadrature reference ---------- */

typedef struct fracl1_quad_config {
  double abs_tol;      /* default 1e-10 */
  double rel_tol;      /* default 1e-10 */
  int nodes_per_panel; /* Gauss-Legendre points per panel, default 16 */
  int max_panel_depth; /* dyadic refinement depth cap, default 52 */
} fracl1_quad_config;

FRACL1_API void fracl1_quad_config_init(fracl1_quad_config *cfg);

/* High-accuracy Caputo derivative of order alpha at t in (0, horizon].
 * cfg may be NULL (defaults). err_estimate may be NULL. Fails with
 * FRACL1_ERR_NO_CONVERGENCE when the tolerance cannot be certified. */
FRACL1_API fracl1_status fracl1_caputo_reference(const fracl1_function *f,
                                                 double alpha, double t,
                                                 const fracl1_quad_config *cfg,
                                                 double *out,
                                                 double *err_estimate);

/* ---------- truncation-error analysis ---------- */

/* Explicit constant C(alpha, beta, k, n) from the a priori truncation bound
 * |L1 - Caputo|(t_n) <= C * [y^(k)]_beta * tau^(k+beta-alpha).
 * k = 0 requires beta > alpha; k = 1 requires k + beta > alpha. */
FRACL1_API fracl1_status fracl1_error_constant(double alpha, double beta, int k,
                                               unsigned long long n,
                                               double *out);

/* The full right-hand side C * seminorm * tau^(k+beta-alpha). */
FRACL1_API fracl1_status fracl1_truncation_bound(double alpha, double beta,
                                                 int k, unsigned long long n,
                                                 double tau, double seminorm,
                                                 double *out);

/* Pointwise interpolation error bound on [t_j, t_j + tau).
 * Regimes: (k=0, beta in (0,1]) with weight = [y]_beta;
 *          (k=1, beta=0)        with weight = modulus of y' at tau;
 *          (k=1, beta in (0,1]) with weight = [y']_beta.
 * The (k=0, beta=0) regime needs a full modulus and lives in the _modulus
 * variant below. */
FRACL1_API fracl1_status fracl1_interpolation_bound(int k, double beta,
                                                    double t, double t_j,
                                                    double tau, double weight,
                                                    double *out);

/* (k=0, beta=0) regime: modulus(delta, user) evaluates the modulus of
 * continuity of y at separation delta. */
FRACL1_API fracl1_status fracl1_interpolation_bound_modulus(
    double t, double t_j, double tau, fracl1_eval_fn modulus, void *user,
    double *out);

/* A priori bound on |Caputo y(t)| for y in C^{0,beta}, beta > alpha. */
FRACL1_API fracl1_status fracl1_caputo_wellposed_bound(double alpha,
                                                       double beta, double t,
                                                       double seminorm,
                                                       double *out);

/* Asymptotic best constant -zeta(alpha-1)/Gamma(2-alpha) for the L1 scheme on
 * C^{1,1} data. */
FRACL1_API fracl1_status fracl1_asymptotic_optimal_constant(double alpha,
                                                            double *out);

/* ---------- convergence-order estimation ---------- */

typedef struct fracl1_order_estimate {
  double estimated_order; /* log2(coarse_diff / fine_diff); NaN if degenerate */
  double coarse_diff;     /* max_n |delta_tau - delta_{tau/2}| at shared nodes */
  double fine_diff;       /* max_n |delta_{tau/2} - delta_{tau/4}| */
} fracl1_order_estimate;

/* Empirical order from three nested grids tau, tau/2, tau/4 on [0, horizon].
 * tau_base must divide horizon into an integer node count. Fails with
 * FRACL1_ERR_DEGENERATE when either max-difference is below 1e-14. */
FRACL1_API fracl1_status fracl1_estimate_order(const fracl1_function *f,
                                               double alpha, double tau_base,
                                               double horizon,
                                               fracl1_order_estimate *out);

/* Order table over the test family: rows alphas, columns kbetas (k+beta
 * values; v <= 1 maps to (k,beta) = (0,v), v > 1 to (1, v-1)). cells is
 * row-major with n_alphas*n_kbetas entries. Degenerate cells come back with
 * estimated_order = NaN instead of failing the whole table. */
FRACL1_API fracl1_status fracl1_order_table(const double *alphas,
                                            size_t n_alphas,
                                            const double *kbetas,
                                            size_t n_kbetas, double tau_base,
                                            double horizon,
                                            fracl1_order_estimate *cells);

/* ---------- truncation-bound verification ---------- */

typedef struct fracl1_bound_check_result {
  int applicable;        /* 0 when the bound's hypothesis excludes the cell */
  size_t worst_node;     /* node with the largest error/bound ratio */
  double observed_error; /* |reference - L1| at that node */
  double bound;          /* truncation bound at that node */
  double ratio;          /* observed/bound; 0 when both are exactly zero */
} fracl1_bound_check_result;

/* Compare the L1 approximation of f against the quadrature reference at every
 * node of the grid with step tau on [0, f's horizon], against the truncation
 * bound built from f's known seminorm (required). */
FRACL1_API fracl1_status fracl1_bound_check_cell(const fracl1_function *f,
                                                 double alpha, double tau,
                                                 const fracl1_quad_config *cfg,
                                                 fracl1_bound_check_result *out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FRACL1_H */
