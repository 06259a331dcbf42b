#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superpi {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands whose degrees, lengths or multidegrees do not agree.
class SizeMismatch : public Error {
public:
  using Error::Error;
};

/// A computation whose predicted size exceeds the configured budget.
/// Never a silent truncation.
class ResourceLimitExceeded : public Error {
public:
  ResourceLimitExceeded(const std::string& what_, double predicted, double limit)
      : Error(what_ + " (predicted " + format(predicted) + ", budget " + format(limit) + ")"),
        predicted_(predicted), limit_(limit) {}

  double predicted() const noexcept { return predicted_; }
  double limit() const noexcept { return limit_; }

private:
  static std::string format(double x);
  double predicted_;
  double limit_;
};

/// Algebra failing one of the #-superalgebra axioms, or a malformed table.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A computed invariant that contradicts itself, e.g. a non-integral
/// multiplicity. Signals a bug, not bad input.
class InternalConsistencyError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  enum class Kind { Lexical, UnbalancedParens, UnknownVariable, MalformedRational, Syntax };

  ParseError(Kind kind, std::size_t position, const std::string& message)
      : Error(message + " at position " + std::to_string(position)), kind_(kind), position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

private:
  Kind kind_;
  std::size_t position_;
};

} // namespace superpi
