#pragma once

#include <stdexcept>
#include <string>

namespace hspecht {

/// Base of every error raised by the library.
struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// Operands live in different rings (mismatched r, n or discriminant).
struct Mismatch : AlgebraError {
  using AlgebraError::AlgebraError;
};

struct DivisionByZero : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// No exact polynomial quotient exists.
struct NotDivisible : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// Linear system without solution.
struct Inconsistent : AlgebraError {
  using AlgebraError::AlgebraError;
};

struct GroupTooLarge : AlgebraError {
  using AlgebraError::AlgebraError;
};

// The following signal a failed mathematical check. They should never fire
// on a correct implementation.

struct DependenceDetected : AlgebraError {
  using AlgebraError::AlgebraError;
};

struct NotStable : AlgebraError {
  using AlgebraError::AlgebraError;
};

struct ExpansionFailed : AlgebraError {
  using AlgebraError::AlgebraError;
};

struct RankDeficient : AlgebraError {
  RankDeficient(int degree, const std::string& what)
      : AlgebraError(what), degree(degree) {}
  int degree;
};

struct ValidationFailure : AlgebraError {
  using AlgebraError::AlgebraError;
};

}  // namespace hspecht
