#pragma once

#include <stdexcept>
#include <string>

namespace epibohm {

/// Thrown when a quantum number outside {+/-1, +/-2} is requested.
/// The four-outcome event space only supports those two representations.
class UnsupportedModelError : public std::domain_error {
 public:
  explicit UnsupportedModelError(int n)
      : std::domain_error("unsupported quantum number n = " + std::to_string(n) +
                          "; the four-outcome model permits n in {+1, -1, +2, -2}") {}
};

/// Thrown by the log/ratio Fisher forms when a cell probability vanishes.
class SingularCellError : public std::domain_error {
 public:
  SingularCellError(const std::string& cell, double theta)
      : std::domain_error("singular cell " + cell + " (zero probability) at theta = " +
                          std::to_string(theta)) {}
};

/// Thrown by simplex metrics evaluated on the boundary of the simplex.
class BoundaryError : public std::domain_error {
 public:
  explicit BoundaryError(std::size_t cell_index)
      : std::domain_error("metric undefined on the simplex boundary: cell " +
                          std::to_string(cell_index) + " has zero probability") {}
};

/// Thrown by angle estimators and their variance formulas at the endpoints of
/// the principal branch, where the inverse map degenerates.
class SingularBranchError : public std::domain_error {
 public:
  explicit SingularBranchError(const std::string& what)
      : std::domain_error("singular branch point: " + what) {}
};

}  // namespace epibohm
