#ifndef BIGSURV_ERRORS_HPP
#define BIGSURV_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bigsurv {

// Base class for every error raised by the library. CLI maps these to exit
// code 1; anything else escaping is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file (CSV or config). Message carries the row number.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A domain type invariant was violated at construction.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Iterative solver failed to converge (includes calibration targets outside
// the convex hull of the sample covariates).
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Singular or rank-deficient linear system.
class SingularityError : public Error {
 public:
  using Error::Error;
};

// Complete or quasi-complete separation in a logistic fit.
class SeparationError : public Error {
 public:
  using Error::Error;
};

// Degenerate inputs: constant response, zero weights, unsupported design pair.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Requested second-phase size violates the feasibility bound.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, std::uint64_t max_feasible)
      : Error(what), max_feasible_n(max_feasible) {}
  std::uint64_t max_feasible_n;
};

}  // namespace bigsurv

#endif
