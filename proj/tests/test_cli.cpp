#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fracl1.h"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Scratch directory per test case; removed on destruction.
struct Scratch {
  fs::path dir;
  Scratch() {
    static int counter = 0;
    dir = fs::temp_directory_path() /
          ("fracl1_cli_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter++));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  fs::path path(const std::string& name) const { return dir / name; }
  fs::path write(const std::string& name, const std::string& text) const {
    const fs::path p = path(name);
    std::ofstream out(p, std::ios::binary);
    out << text;
    return p;
  }
  RunResult run(const std::string& args, const std::string& stdin_name = "") const {
    const fs::path out_path = path("run_stdout");
    const fs::path err_path = path("run_stderr");
    std::string cmd = std::string(FRACL1_CLI_PATH) + " " + args + " >" +
                      out_path.string() + " 2>" + err_path.string();
    if (!stdin_name.empty()) {
      cmd += " <" + path(stdin_name).string();
    }
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = (raw != -1 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
  }
};

std::vector<std::vector<double>> parse_csv(const std::string& text,
                                           size_t fields) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || std::isalpha(line[0])) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    REQUIRE(row.size() == fields);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_CASE("order-table renders a markdown table") {
  Scratch s;
  const RunResult r =
      s.run("order-table --alphas 0.5 --kbeta 0.5,1.5 --tau 0.015625");
  CHECK(r.code == 0);
  CHECK(r.out.find("| alpha \\ k+beta | 0.50 | 1.50 |") != std::string::npos);
  CHECK(r.out.find("| 0.50 | 0.00 | 1.00 |") != std::string::npos);
}

TEST_CASE("order-table marks degenerate cells") {
  Scratch s;
  const RunResult r = s.run("order-table --alphas 0.5 --kbeta 1 --tau 0.0625");
  CHECK(r.code == 0);
  CHECK(r.out.find("n/a") != std::string::npos);
}

TEST_CASE("order-table csv matches the library and reruns byte-identically") {
  Scratch s;
  const std::string args =
      "order-table --alphas 0.3,0.7 --kbeta 0.5,1.5 --tau 0.03125 --format csv";
  const RunResult first = s.run(args + " --out " + s.path("a.csv").string());
  const RunResult second = s.run(args + " --out " + s.path("b.csv").string());
  REQUIRE(first.code == 0);
  REQUIRE(second.code == 0);
  const std::string a = slurp(s.path("a.csv"));
  CHECK(a == slurp(s.path("b.csv")));
  CHECK(a.rfind("# fracl1 order-table", 0) == 0);

  const double alphas[2] = {0.3, 0.7};
  const double kbetas[2] = {0.5, 1.5};
  fracl1_order_estimate cells[4];
  REQUIRE(fracl1_order_table(alphas, 2, kbetas, 2, 0.03125, 1.0, cells) ==
          FRACL1_OK);
  const auto rows = parse_csv(a, 5);
  REQUIRE(rows.size() == 4);
  for (size_t i = 0; i < 4; ++i) {
    CHECK(rows[i][0] == alphas[i / 2]);
    CHECK(rows[i][1] == kbetas[i % 2]);
    // format_double round-trips exactly, so parsed values equal computed ones.
    CHECK(rows[i][2] == cells[i].estimated_order);
    CHECK(rows[i][3] == cells[i].coarse_diff);
    CHECK(rows[i][4] == cells[i].fine_diff);
  }
}

TEST_CASE("order-table reports invalid parameters as a computation error") {
  Scratch s;
  const RunResult r = s.run("order-table --alphas 1.5 --kbeta 0.5");
  CHECK(r.code == 2);
  CHECK(r.err.find("order-table") != std::string::npos);
}

TEST_CASE("bound-check csv matches the library cell by cell") {
  Scratch s;
  const RunResult r = s.run(
      "bound-check --alpha 0.3 --kbeta 1.5 --tau 0.0625 --levels 2 "
      "--format csv");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("# fracl1 bound-check alpha=0.3 k=1 beta=0.5", 0) == 0);
  const auto rows = parse_csv(r.out, 6);
  REQUIRE(rows.size() == 2);
  fracl1_function* f = fracl1_function_new_test(1, 0.5);
  REQUIRE(f != nullptr);
  for (size_t i = 0; i < rows.size(); ++i) {
    const double tau = 0.0625 / static_cast<double>(1 << i);
    CHECK(rows[i][0] == tau);
    fracl1_bound_check_result res;
    REQUIRE(fracl1_bound_check_cell(f, 0.3, tau, nullptr, &res) == FRACL1_OK);
    CHECK(rows[i][1] == 1.0);
    CHECK(rows[i][2] == static_cast<double>(res.worst_node));
    CHECK(rows[i][3] == res.observed_error);
    CHECK(rows[i][4] == res.bound);
    CHECK(rows[i][5] == res.ratio);
    CHECK(rows[i][5] <= 1.0);
  }
  fracl1_function_free(f);
}

TEST_CASE("bound-check renders non-applicable cells") {
  Scratch s;
  const RunResult r =
      s.run("bound-check --alpha 0.5 --kbeta 0.25 --tau 0.0625 --levels 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("| no | - | - | - | - |") != std::string::npos);
}

TEST_CASE("bound-check rejects an invalid smoothness value") {
  Scratch s;
  const RunResult r = s.run("bound-check --alpha 0.5 --kbeta 2.5");
  CHECK(r.code == 2);
  CHECK(r.err.find("invalid k+beta") != std::string::npos);
}

TEST_CASE("apply computes the discrete derivative of piped samples") {
  Scratch s;
  s.write("in.csv", "t,y\n0,0\n0.25,0.25\n0.5,0.5\n");
  const RunResult r = s.run("apply - --alpha 0.5", "in.csv");
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out, 2);
  REQUIRE(rows.size() == 2);
  // y = t: the half derivative is 2 sqrt(t/pi).
  for (const auto& row : rows) {
    CHECK(row[1] == doctest::Approx(2.0 * std::sqrt(row[0] / M_PI))
                        .epsilon(1e-12));
  }
}

TEST_CASE("apply reads files, honors --out, and skips comments") {
  Scratch s;
  s.write("in.csv", "# sampled ramp\n0,0\n0.5,1\n1.0,2\n");
  const fs::path out = s.path("out.csv");
  const RunResult r = s.run("apply " + s.path("in.csv").string() +
                            " --alpha 0.3 --out " + out.string());
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  const std::string text = slurp(out);
  CHECK(text.rfind("t,l1_caputo", 0) == 0);
  CHECK(parse_csv(text, 2).size() == 2);
}

TEST_CASE("apply rejects malformed input data") {
  Scratch s;
  s.write("short.csv", "0,0\n");
  CHECK(s.run("apply - --alpha 0.5", "short.csv").code == 2);
  s.write("uneven.csv", "0,0\n0.5,1\n0.6,2\n");
  CHECK(s.run("apply - --alpha 0.5", "uneven.csv").code == 2);
  s.write("offset.csv", "1,0\n2,1\n3,2\n");
  CHECK(s.run("apply - --alpha 0.5", "offset.csv").code == 2);
  s.write("garbled.csv", "0,0\n0.5,oops\n1,2\n");
  CHECK(s.run("apply - --alpha 0.5", "garbled.csv").code == 2);
  s.write("empty.csv", "");
  CHECK(s.run("apply - --alpha 0.5", "empty.csv").code == 2);
  const RunResult missing = s.run("apply " + s.path("nope.csv").string() +
                                  " --alpha 0.5");
  CHECK(missing.code == 3);
}

TEST_CASE("usage errors exit with code 1") {
  Scratch s;
  s.write("empty.csv", "");
  CHECK(s.run("", "empty.csv").code == 1);
  CHECK(s.run("frobnicate", "empty.csv").code == 1);
  CHECK(s.run("bound-check --kbeta 1.5", "empty.csv").code == 1);
  CHECK(s.run("apply - ", "empty.csv").code == 1);  // --alpha is required
  CHECK(s.run("order-table --format yaml", "empty.csv").code == 1);
  CHECK(s.run("--help").code == 0);
}

TEST_CASE("output failures exit with code 3") {
  Scratch s;
  const RunResult r = s.run(
      "order-table --alphas 0.5 --kbeta 0.5 --tau 0.0625 --out " +
      (s.dir / "no_dir" / "x.csv").string());
  CHECK(r.code == 3);
  CHECK(r.err.find("cannot open output file") != std::string::npos);
}
