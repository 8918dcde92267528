#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "experiments.hpp"

using namespace fracl1;

TEST_CASE("split_kbeta decodes the combined smoothness value") {
  CHECK(split_kbeta(0.5).k == 0);
  CHECK(split_kbeta(0.5).beta == 0.5);
  CHECK(split_kbeta(1.0).k == 0);
  CHECK(split_kbeta(1.0).beta == 1.0);
  CHECK(split_kbeta(1.5).k == 1);
  CHECK(split_kbeta(1.5).beta == doctest::Approx(0.5));
  CHECK(split_kbeta(2.0).k == 1);
  CHECK(split_kbeta(2.0).beta == 1.0);
  CHECK_THROWS_AS(split_kbeta(0.0), std::invalid_argument);
  CHECK_THROWS_AS(split_kbeta(2.1), std::invalid_argument);
  CHECK_THROWS_AS(split_kbeta(-0.5), std::invalid_argument);
  CHECK_THROWS_AS(split_kbeta(std::nan("")), std::invalid_argument);
}

TEST_CASE("order_table fills cells row-major and isolates degenerate ones") {
  const OrderTable table =
      order_table({0.5}, {0.5, 1.0, 1.5}, 1.0 / 64, 1.0);
  REQUIRE(table.cells.size() == 3);
  CHECK(std::fabs(table.cells[0].estimated_order - 0.0) < 0.05);
  // k+beta = 1 is the exact-interpolant column: no measurable differences.
  CHECK(std::isnan(table.cells[1].estimated_order));
  CHECK(std::isnan(table.cells[1].coarse_diff));
  CHECK(std::fabs(table.cells[2].estimated_order - 1.0) < 0.05);
  CHECK(table.alphas == std::vector<double>{0.5});
  CHECK(table.tau_base == 1.0 / 64);
  CHECK_THROWS_AS(order_table({}, {0.5}, 1.0 / 64, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(order_table({0.5}, {}, 1.0 / 64, 1.0), std::invalid_argument);
}

TEST_CASE("bound_check_cell reports the worst node under the bound") {
  const HolderFunction f = make_test_function(TestFunctionSpec{1, 0.5});
  const BoundCheckCell cell = bound_check_cell(f, 0.3, 1.0 / 16, {});
  CHECK(cell.applicable);
  CHECK(cell.worst_node >= 1);
  CHECK(cell.worst_node <= 16);
  CHECK(cell.observed_error > 0.0);
  CHECK(cell.observed_error <= cell.bound);
  CHECK(cell.ratio == doctest::Approx(cell.observed_error / cell.bound));
  CHECK(cell.ratio > 0.0);
  CHECK(cell.ratio <= 1.0);
}

TEST_CASE("bound_check_cell flags cells outside the bound's hypothesis") {
  const HolderFunction f = make_test_function(TestFunctionSpec{0, 0.25});
  const BoundCheckCell cell = bound_check_cell(f, 0.5, 1.0 / 8, {});
  CHECK_FALSE(cell.applicable);
  CHECK(cell.ratio == 0.0);
}

TEST_CASE("bound_check_cell handles an identically zero function") {
  HolderFunction zero;
  zero.eval = [](double) { return 0.0; };
  zero.k = 1;
  zero.beta = 1.0;
  zero.horizon = 1.0;
  zero.known_seminorm = 0.0;
  const BoundCheckCell cell = bound_check_cell(zero, 0.5, 0.25, {});
  CHECK(cell.applicable);
  CHECK(cell.observed_error == 0.0);
  CHECK(cell.bound == 0.0);
  CHECK(cell.ratio == 0.0);
}

TEST_CASE("bound_check_cell validates its inputs") {
  const HolderFunction f = make_test_function(TestFunctionSpec{1, 0.5});
  CHECK_THROWS_AS(bound_check_cell(f, 0.3, 0.3, {}), std::invalid_argument);
  CHECK_THROWS_AS(bound_check_cell(f, 1.3, 0.25, {}), std::invalid_argument);
  CHECK_THROWS_AS(bound_check_cell(f, 0.3, 0.0, {}), std::invalid_argument);
  HolderFunction anon = f;
  anon.known_seminorm.reset();
  CHECK_THROWS_AS(bound_check_cell(anon, 0.3, 0.25, {}), std::invalid_argument);
}
