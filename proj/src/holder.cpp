#include "holder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracl1 {

namespace {

void validate_spec(const TestFunctionSpec& spec, const char* where) {
  if (spec.k != 0 && spec.k != 1) {
    throw std::invalid_argument(std::string(where) + ": k must be 0 or 1");
  }
  if (!(spec.beta > 0.0 && spec.beta <= 1.0)) {
    throw std::invalid_argument(std::string(where) + ": beta must lie in (0, 1]");
  }
}

}  // namespace

double y_test(const TestFunctionSpec& spec, double t) {
  validate_spec(spec, "y_test");
  const double x = t - 0.5;
  const double p = std::pow(std::fabs(x), spec.beta);
  return spec.k == 0 ? p : x * p;
}

HolderFunction make_test_function(const TestFunctionSpec& spec) {
  validate_spec(spec, "make_test_function");
  HolderFunction f;
  f.k = spec.k;
  f.beta = spec.beta;
  f.horizon = 1.0;
  f.eval = [spec](double t) { return y_test(spec, t); };
  f.known_seminorm = spec.k == 0 ? 1.0 : 1.0 + spec.beta;
  if (spec.k == 1) {
    const double beta = spec.beta;
    f.derivative = [beta](double t) {
      return (1.0 + beta) * std::pow(std::fabs(t - 0.5), beta);
    };
  }
  f.kinks = {0.5};
  f.power_kink = PowerKink{0.5, 1.0};
  return f;
}

double modulus_of_continuity(const HolderFunction& f, double delta,
                             int samples_per_interval) {
  if (!f.eval) throw std::invalid_argument("modulus_of_continuity: empty function");
  if (!(delta > 0.0 && delta <= f.horizon)) {
    throw std::invalid_argument(
        "modulus_of_continuity: delta must lie in (0, horizon]");
  }
  if (samples_per_interval < 2) {
    throw std::invalid_argument(
        "modulus_of_continuity: samples_per_interval must be at least 2");
  }
  const double T = f.horizon;
  const double h = delta / samples_per_interval;
  const auto count = static_cast<std::size_t>(std::ceil(T / h));
  std::vector<double> vals(count + 1);
  for (std::size_t i = 0; i <= count; ++i) {
    vals[i] = f.eval(std::min(static_cast<double>(i) * h, T));
  }
  double best = 0.0;
  const auto spi = static_cast<std::size_t>(samples_per_interval);
  for (std::size_t i = 0; i <= count; ++i) {
    const std::size_t jmax = std::min(i + spi, count);
    for (std::size_t j = i + 1; j <= jmax; ++j) {
      best = std::max(best, std::fabs(vals[j] - vals[i]));
    }
  }
  // Pairs at exact separation delta, which need not fall on the grid.
  const auto probe = [&](double a, double b) {
    a = std::clamp(a, 0.0, T);
    b = std::clamp(b, 0.0, T);
    if (b - a > delta * (1.0 + 1e-12)) return;
    best = std::max(best, std::fabs(f.eval(b) - f.eval(a)));
  };
  for (std::size_t i = 0; i <= count; ++i) {
    const double t = std::min(static_cast<double>(i) * h, T);
    probe(t, t + delta);
  }
  // Kink-straddling and kink-touching pairs.
  for (double c : f.kinks) {
    probe(c, c + delta);
    probe(c - delta, c);
    probe(c - 0.5 * delta, c + 0.5 * delta);
  }
  probe(T - delta, T);
  return best;
}

double holder_seminorm(const HolderFunction& f, double beta, int pair_samples) {
  if (!f.eval) throw std::invalid_argument("holder_seminorm: empty function");
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("holder_seminorm: beta must lie in (0, 1]");
  }
  if (pair_samples < 2) {
    throw std::invalid_argument("holder_seminorm: pair_samples must be at least 2");
  }
  const double T = f.horizon;
  const std::size_t m = std::min<std::size_t>(pair_samples, 512);
  std::vector<double> pts(m + 1);
  std::vector<double> vals(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    pts[i] = T * static_cast<double>(i) / static_cast<double>(m);
    vals[i] = f.eval(pts[i]);
  }
  double best = 0.0;
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = i + 1; j <= m; ++j) {
      const double ratio =
          std::fabs(vals[j] - vals[i]) / std::pow(pts[j] - pts[i], beta);
      best = std::max(best, ratio);
    }
  }
  const auto probe = [&](double a, double b) {
    if (a < 0.0 || b > T || !(b > a)) return;
    best = std::max(best,
                    std::fabs(f.eval(b) - f.eval(a)) / std::pow(b - a, beta));
  };
  std::vector<double> anchors = f.kinks;
  anchors.push_back(0.0);
  anchors.push_back(T);
  for (double c : anchors) {
    for (int j = 1; j <= 40; ++j) {
      const double sep = std::ldexp(T, -j);
      probe(c, c + sep);
      probe(c - sep, c);
      probe(c - sep, c + sep);
      probe(c - sep, c + 0.5 * sep);
    }
  }
  return best;
}

SampledFunction sample_on_grid(const HolderFunction& f, const UniformGrid& grid) {
  if (!f.eval) throw std::invalid_argument("sample_on_grid: empty function");
  if (grid.horizon() > f.horizon * (1.0 + 1e-12)) {
    throw std::invalid_argument("sample_on_grid: grid exceeds the function domain");
  }
  SampledFunction s;
  s.grid = grid;
  s.values.resize(grid.n_max + 1);
  for (std::size_t n = 0; n <= grid.n_max; ++n) {
    s.values[n] = f.eval(grid.node(n));
  }
  validate_samples(s, "sample_on_grid");
  return s;
}

}  // namespace fracl1
