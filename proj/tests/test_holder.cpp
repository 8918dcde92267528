#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "holder.hpp"

using namespace fracl1;

TEST_CASE("test family evaluates the kink formula") {
  const TestFunctionSpec even{0, 0.5};
  CHECK(y_test(even, 0.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(y_test(even, 0.5) == 0.0);
  CHECK(y_test(even, 1.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  // k = 0 is symmetric about the kink, k = 1 antisymmetric. Dyadic offsets
  // keep 0.5 +/- d exact so the symmetry holds bit for bit.
  const TestFunctionSpec odd{1, 0.5};
  for (double d : {0.125, 0.25, 0.4375}) {
    CHECK(y_test(even, 0.5 - d) == y_test(even, 0.5 + d));
    CHECK(y_test(odd, 0.5 - d) == -y_test(odd, 0.5 + d));
  }
  CHECK(y_test(odd, 1.0) == doctest::Approx(0.5 * std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("test family rejects invalid smoothness parameters") {
  CHECK_THROWS_AS(y_test(TestFunctionSpec{2, 0.5}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(y_test(TestFunctionSpec{0, 0.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(y_test(TestFunctionSpec{0, 1.5}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_test_function(TestFunctionSpec{-1, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("test function carries exact metadata") {
  const HolderFunction f0 = make_test_function(TestFunctionSpec{0, 0.25});
  CHECK(f0.k == 0);
  CHECK(f0.beta == 0.25);
  CHECK(f0.horizon == 1.0);
  REQUIRE(f0.known_seminorm.has_value());
  CHECK(*f0.known_seminorm == 1.0);
  CHECK_FALSE(static_cast<bool>(f0.derivative));
  REQUIRE(f0.kinks.size() == 1);
  CHECK(f0.kinks[0] == 0.5);
  REQUIRE(f0.power_kink.has_value());
  CHECK(f0.power_kink->center == 0.5);
  CHECK(f0.power_kink->scale == 1.0);

  const HolderFunction f1 = make_test_function(TestFunctionSpec{1, 0.75});
  REQUIRE(f1.known_seminorm.has_value());
  CHECK(*f1.known_seminorm == 1.75);
  REQUIRE(static_cast<bool>(f1.derivative));
  // y' = (1+beta) |t - 1/2|^beta.
  CHECK(f1.derivative(0.9) ==
        doctest::Approx(1.75 * std::pow(0.4, 0.75)).epsilon(1e-15));
  CHECK(f1.derivative(0.5) == 0.0);
}

TEST_CASE("seminorm estimate hits the exact seminorm for the kink family") {
  // For y = |t-1/2|^beta the Holder-beta ratio peaks at kink-touching pairs
  // where it equals exactly 1; all other pairs stay below.
  for (double beta : {0.25, 0.5, 0.9}) {
    const HolderFunction f = make_test_function(TestFunctionSpec{0, beta});
    const double est = holder_seminorm(f, beta, 128);
    CHECK(est == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(est <= 1.0 + 1e-12);  // lower bound by construction
  }
}

TEST_CASE("modulus estimate matches the exact modulus") {
  // k = 0: the sup of |y(t)-y(s)| over |t-s| <= delta is delta^beta, reached
  // by pairs touching the kink.
  const HolderFunction f0 = make_test_function(TestFunctionSpec{0, 0.5});
  for (double delta : {0.25, 0.1, 0.03125}) {
    const double est = modulus_of_continuity(f0, delta, 8);
    const double exact = std::pow(delta, 0.5);
    CHECK(est == doctest::Approx(exact).epsilon(1e-9));
    CHECK(est <= exact * (1.0 + 1e-12));
  }
  // k = 1: y is increasing with the steepest delta-window at the endpoints,
  // so the modulus is y(1) - y(1-delta).
  const HolderFunction f1 = make_test_function(TestFunctionSpec{1, 0.5});
  const double delta = 0.125;
  const double exact = f1.eval(1.0) - f1.eval(1.0 - delta);
  CHECK(modulus_of_continuity(f1, delta, 8) ==
        doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("estimators validate their inputs") {
  const HolderFunction f = make_test_function(TestFunctionSpec{0, 0.5});
  CHECK_THROWS_AS(modulus_of_continuity(f, 0.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(modulus_of_continuity(f, 1.5, 8), std::invalid_argument);
  CHECK_THROWS_AS(modulus_of_continuity(f, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(holder_seminorm(f, 0.0, 64), std::invalid_argument);
  CHECK_THROWS_AS(holder_seminorm(f, 1.1, 64), std::invalid_argument);
  CHECK_THROWS_AS(holder_seminorm(f, 0.5, 1), std::invalid_argument);
  HolderFunction empty;
  CHECK_THROWS_AS(modulus_of_continuity(empty, 0.5, 8), std::invalid_argument);
  CHECK_THROWS_AS(holder_seminorm(empty, 0.5, 8), std::invalid_argument);
}

TEST_CASE("sample_on_grid evaluates at the nodes and respects the domain") {
  const HolderFunction f = make_test_function(TestFunctionSpec{1, 1.0});
  const UniformGrid grid = make_uniform_grid(0.125, 8);
  const SampledFunction s = sample_on_grid(f, grid);
  REQUIRE(s.values.size() == 9);
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK(s.values[n] == f.eval(grid.node(n)));
  }
  CHECK_THROWS_AS(sample_on_grid(f, make_uniform_grid(0.5, 3)),
                  std::invalid_argument);
}
