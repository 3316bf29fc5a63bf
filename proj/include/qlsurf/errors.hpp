#pragma once

#include <stdexcept>
#include <string>

namespace qls {

// An iterative method (eigenvector refinement, quadrature, bracketing) did
// not reach its tolerance. The CLI maps this to exit status 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent substance data (file or programmatic).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A lookup by name failed; the message lists what is available.
class UnknownNameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qls
