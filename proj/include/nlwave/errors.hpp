#pragma once

#include <stdexcept>
#include <string>

namespace nlwave {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An iterative evaluation (series or adaptive quadrature) gave up.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_value, double last_error)
      : std::runtime_error(what), last_value_(last_value), last_error_(last_error) {}

  // Partial sum or integral estimate at the point of failure.
  double last_value() const noexcept { return last_value_; }
  // Magnitude of the last term, or the quadrature error estimate.
  double last_error() const noexcept { return last_error_; }

 private:
  double last_value_;
  double last_error_;
};

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A multiplier table entry violated m <= 0.
class CorruptedTableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad command line or configuration input.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace nlwave
