#pragma once

#include <stdexcept>
#include <string>

namespace ramc {

// Argument outside the mathematical domain of an operation (x <= 0, x >= 1, ...).
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Parameters outside the scope required by an operation (a,b in (0,1), a+b <= 1).
struct scope_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Requested sequence length exceeds the configured cap.
struct size_error : std::length_error {
  using std::length_error::length_error;
};

// A numeric procedure (quadrature, series summation) failed to converge.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ramc
