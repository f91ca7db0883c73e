#pragma once

#include <stdexcept>
#include <string>

namespace liouville {

// Usage-level problems: bad parameters, bad configuration.
struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numerical / domain failures.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateExponents : NumericalError {
  DegenerateExponents() : NumericalError("pq = 1: scaling exponents are undefined") {}
};

struct NotSubcritical : NumericalError {
  NotSubcritical() : NumericalError("parameters are not subcritical") {}
};

struct NoEpsilonFound : NumericalError {
  NoEpsilonFound() : NumericalError("no positive epsilon certificate found (tolerance problem)") {}
};

struct NoSolution : NumericalError {
  using NumericalError::NumericalError;
};

struct NegativeBase : NumericalError {
  using NumericalError::NumericalError;
};

struct StepUnderflow : NumericalError {
  using NumericalError::NumericalError;
};

struct OutOfDomain : NumericalError {
  using NumericalError::NumericalError;
};

struct InvalidBracket : NumericalError {
  using NumericalError::NumericalError;
};

struct UnsupportedOrder : NumericalError {
  using NumericalError::NumericalError;
};

struct UnsupportedKind : NumericalError {
  using NumericalError::NumericalError;
};

struct NotPositive : NumericalError {
  using NumericalError::NumericalError;
};

struct NotPositiveOnWindow : NumericalError {
  using NumericalError::NumericalError;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace liouville
