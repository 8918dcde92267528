// fracl1 command-line front end: convergence-order tables, truncation-bound
// checks, and direct L1 evaluation of sampled data. Talks to the library
// exclusively through the public C API.

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fracl1.h"

namespace {

// Shortest representation that round-trips through binary64.
std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

// Fixed two decimals for human-facing tables; "-0.00" is normalized and NaN
// (degenerate order cells) renders as "n/a".
std::string format_fixed2(double v) {
  if (std::isnan(v)) return "n/a";
  double r = v;
  if (std::fabs(r) < 0.005) r = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", r);
  return buf;
}

bool parse_strict_double(const std::string& text, double& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  while (first != last && (*first == ' ' || *first == '\t')) ++first;
  while (last != first && (*(last - 1) == ' ' || *(last - 1) == '\t' ||
                           *(last - 1) == '\r')) {
    --last;
  }
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last && first != last;
}

int with_output(const std::string& path,
                const std::function<int(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    return body(std::cout);
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "fracl1: cannot open output file: " << path << "\n";
    return 3;
  }
  const int rc = body(out);
  out.flush();
  if (!out) {
    std::cerr << "fracl1: write failed: " << path << "\n";
    return 3;
  }
  return rc;
}

int report_status(const char* what, fracl1_status status) {
  std::cerr << "fracl1: " << what << ": " << fracl1_status_message(status)
            << "\n";
  return 2;
}

// ---------- order-table ----------

struct OrderTableArgs {
  std::vector<double> alphas{0.1, 0.3, 0.5, 0.7, 0.9};
  std::vector<double> kbetas{0.1, 0.3, 0.5, 0.7, 0.9,
                             1.1, 1.3, 1.5, 1.7, 1.9};
  double tau = 1.0 / 1024.0;
  double horizon = 1.0;
  std::string format = "markdown";
  std::string out_path;
};

int run_order_table(const OrderTableArgs& args) {
  const size_t rows = args.alphas.size();
  const size_t cols = args.kbetas.size();
  std::vector<fracl1_order_estimate> cells(rows * cols);
  const fracl1_status status = fracl1_order_table(
      args.alphas.data(), rows, args.kbetas.data(), cols, args.tau,
      args.horizon, cells.data());
  if (status != FRACL1_OK) {
    return report_status("order-table", status);
  }
  return with_output(args.out_path, [&](std::ostream& out) {
    if (args.format == "csv") {
      out << "# fracl1 order-table tau=" << format_double(args.tau)
          << " horizon=" << format_double(args.horizon) << "\n";
      out << "alpha,kbeta,estimated_order,coarse_diff,fine_diff\n";
      for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) {
          const fracl1_order_estimate& cell = cells[i * cols + j];
          out << format_double(args.alphas[i]) << ','
              << format_double(args.kbetas[j]) << ','
              << format_double(cell.estimated_order) << ','
              << format_double(cell.coarse_diff) << ','
              << format_double(cell.fine_diff) << "\n";
        }
      }
    } else {
      out << "| alpha \\ k+beta |";
      for (double v : args.kbetas) out << ' ' << format_fixed2(v) << " |";
      out << "\n|---|";
      for (size_t j = 0; j < cols; ++j) out << "---|";
      out << "\n";
      for (size_t i = 0; i < rows; ++i) {
        out << "| " << format_fixed2(args.alphas[i]) << " |";
        for (size_t j = 0; j < cols; ++j) {
          out << ' ' << format_fixed2(cells[i * cols + j].estimated_order)
              << " |";
        }
        out << "\n";
      }
    }
    return 0;
  });
}

// ---------- bound-check ----------

struct BoundCheckArgs {
  double alpha = 0.5;
  double kbeta = 1.5;
  double tau = 1.0 / 64.0;
  int levels = 5;
  double oracle_tol = 1e-10;
  std::string format = "markdown";
  std::string out_path;
};

int run_bound_check(const BoundCheckArgs& args) {
  const int k = args.kbeta > 1.0 ? 1 : 0;
  const double beta = args.kbeta > 1.0 ? args.kbeta - 1.0 : args.kbeta;
  fracl1_function* f = fracl1_function_new_test(k, beta);
  if (f == nullptr) {
    std::cerr << "fracl1: bound-check: invalid k+beta value\n";
    return 2;
  }
  fracl1_quad_config cfg;
  fracl1_quad_config_init(&cfg);
  cfg.abs_tol = args.oracle_tol;
  cfg.rel_tol = args.oracle_tol;

  std::vector<double> taus;
  std::vector<fracl1_bound_check_result> results;
  for (int level = 0; level < args.levels; ++level) {
    const double tau = args.tau / static_cast<double>(1 << level);
    fracl1_bound_check_result res;
    const fracl1_status status =
        fracl1_bound_check_cell(f, args.alpha, tau, &cfg, &res);
    if (status != FRACL1_OK) {
      fracl1_function_free(f);
      return report_status("bound-check", status);
    }
    taus.push_back(tau);
    results.push_back(res);
  }
  fracl1_function_free(f);

  return with_output(args.out_path, [&](std::ostream& out) {
    if (args.format == "csv") {
      out << "# fracl1 bound-check alpha=" << format_double(args.alpha)
          << " k=" << k << " beta=" << format_double(beta) << "\n";
      out << "tau,applicable,worst_node,observed_error,bound,ratio\n";
      for (size_t i = 0; i < results.size(); ++i) {
        const fracl1_bound_check_result& r = results[i];
        out << format_double(taus[i]) << ',' << r.applicable << ','
            << r.worst_node << ',' << format_double(r.observed_error) << ','
            << format_double(r.bound) << ',' << format_double(r.ratio) << "\n";
      }
    } else {
      out << "| tau | applicable | worst node | observed error | bound | "
             "ratio |\n";
      out << "|---|---|---|---|---|---|\n";
      for (size_t i = 0; i < results.size(); ++i) {
        const fracl1_bound_check_result& r = results[i];
        char obs[32], bnd[32], rat[32];
        std::snprintf(obs, sizeof obs, "%.3e", r.observed_error);
        std::snprintf(bnd, sizeof bnd, "%.3e", r.bound);
        std::snprintf(rat, sizeof rat, "%.4f", r.ratio);
        out << "| " << format_double(taus[i]) << " | "
            << (r.applicable ? "yes" : "no") << " | ";
        if (r.applicable) {
          out << r.worst_node << " | " << obs << " | " << bnd << " | " << rat
              << " |\n";
        } else {
          out << "- | - | - | - |\n";
        }
      }
    }
    return 0;
  });
}

// ---------- apply ----------

struct ApplyArgs {
  std::string input_path;
  double alpha = 0.5;
  std::string out_path;
};

int read_samples(const std::string& path, std::vector<double>& times,
                 std::vector<double>& values) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) {
      std::cerr << "fracl1: cannot open input file: " << path << "\n";
      return 3;
    }
    in = &file;
  }
  std::string line;
  size_t line_no = 0;
  while (std::getline(*in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const size_t comma = line.find(',');
    if (comma == std::string::npos) {
      std::cerr << "fracl1: apply: line " << line_no
                << ": expected 't,y'\n";
      return 2;
    }
    double t = 0.0;
    double y = 0.0;
    if (!parse_strict_double(line.substr(0, comma), t) ||
        !parse_strict_double(line.substr(comma + 1), y)) {
      if (line_no == 1) continue;  // tolerate a header row
      std::cerr << "fracl1: apply: line " << line_no
                << ": malformed number\n";
      return 2;
    }
    times.push_back(t);
    values.push_back(y);
  }
  if (times.size() < 2) {
    std::cerr << "fracl1: apply: need at least two samples\n";
    return 2;
  }
  return 0;
}

int run_apply(const ApplyArgs& args) {
  std::vector<double> times;
  std::vector<double> values;
  const int rc = read_samples(args.input_path, times, values);
  if (rc != 0) return rc;

  const size_t count = times.size();
  const size_t n_max = count - 1;
  const double horizon = times.back() - times.front();
  const double tau = horizon / static_cast<double>(n_max);
  if (!(tau > 0.0)) {
    std::cerr << "fracl1: apply: time column must increase\n";
    return 2;
  }
  const double slack = 1e-9 * std::max(horizon, 1.0);
  if (std::fabs(times.front()) > slack) {
    std::cerr << "fracl1: apply: the first sample must sit at t = 0\n";
    return 2;
  }
  for (size_t i = 0; i <= n_max; ++i) {
    if (std::fabs(times[i] - static_cast<double>(i) * tau) > slack) {
      std::cerr << "fracl1: apply: sample times are not uniformly spaced\n";
      return 2;
    }
  }

  std::vector<double> result(n_max);
  const fracl1_status status = fracl1_l1_apply_all(values.data(), count, tau,
                                                   args.alpha, result.data());
  if (status != FRACL1_OK) {
    return report_status("apply", status);
  }
  return with_output(args.out_path, [&](std::ostream& out) {
    out << "t,l1_caputo\n";
    for (size_t n = 1; n <= n_max; ++n) {
      out << format_double(static_cast<double>(n) * tau) << ','
          << format_double(result[n - 1]) << "\n";
    }
    return 0;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"L1 discretization of the Caputo fractional derivative: "
               "convergence tables, truncation-bound checks, and direct "
               "evaluation"};
  app.require_subcommand(1);

  OrderTableArgs ot;
  CLI::App* order = app.add_subcommand(
      "order-table", "Empirical convergence orders over the kink test family");
  order->add_option("--alphas", ot.alphas, "Fractional orders (rows)")
      ->delimiter(',');
  order->add_option("--kbeta", ot.kbetas, "k+beta smoothness values (columns)")
      ->delimiter(',');
  order->add_option("--tau", ot.tau, "Coarsest grid step");
  order->add_option("--horizon", ot.horizon, "Time horizon T");
  order->add_option("--format", ot.format, "Output format")
      ->check(CLI::IsMember({"csv", "markdown"}));
  order->add_option("--out", ot.out_path, "Output file (default stdout)");

  BoundCheckArgs bc;
  CLI::App* bound = app.add_subcommand(
      "bound-check", "Truncation bound vs. observed error on one cell");
  bound->add_option("--alpha", bc.alpha, "Fractional order")->required();
  bound->add_option("--kbeta", bc.kbeta, "k+beta smoothness value")->required();
  bound->add_option("--tau", bc.tau, "Coarsest grid step");
  bound->add_option("--levels", bc.levels, "Number of dyadic refinements")
      ->check(CLI::Range(1, 12));
  bound->add_option("--oracle-tol", bc.oracle_tol,
                    "Quadrature reference tolerance");
  bound->add_option("--format", bc.format, "Output format")
      ->check(CLI::IsMember({"csv", "markdown"}));
  bound->add_option("--out", bc.out_path, "Output file (default stdout)");

  ApplyArgs ap;
  CLI::App* apply = app.add_subcommand(
      "apply", "L1 Caputo derivative of uniformly sampled CSV data (t,y)");
  apply->add_option("input", ap.input_path, "Input CSV file ('-' for stdin)");
  apply->add_option("--alpha", ap.alpha, "Fractional order")->required();
  apply->add_option("--out", ap.out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (order->parsed()) return run_order_table(ot);
  if (bound->parsed()) return run_bound_check(bc);
  return run_apply(ap);
}
