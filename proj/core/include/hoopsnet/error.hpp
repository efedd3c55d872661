#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hoopsnet {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input data (bad CSV cell, violated record
// invariant, out-of-range node id). Maps to CLI exit code 2.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Numerical failure (non-convergence, separation). Maps to CLI exit code 3.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& msg) : Error(msg) {}
};

// Iterative solver ran out of iterations. Carries the last iterate and the
// residual at the point of failure.
class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& msg, std::vector<double> last, double resid, int iters)
      : NumericalError(msg), last_iterate(std::move(last)), residual(resid), iterations(iters) {}

  std::vector<double> last_iterate;
  double residual = 0.0;
  int iterations = 0;
};

// Logistic-regression coefficients diverged; the data is likely separable.
class SeparationError : public NumericalError {
 public:
  explicit SeparationError(const std::string& msg) : NumericalError(msg) {}
};

}  // namespace hoopsnet
