#pragma once

#include <stdexcept>
#include <string>

namespace fracl1 {

// Quadrature could not certify the requested tolerance within its panel budget.
class NoConvergenceError : public std::runtime_error {
 public:
  explicit NoConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Nested-grid differences are below noise level; no order information.
class DegenerateDifferenceError : public std::runtime_error {
 public:
  explicit DegenerateDifferenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fracl1
