#pragma once

#include <stdexcept>
#include <string>

namespace torsionlab {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation exactly at a pole of a meromorphic function.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Iterative method failed; message carries the bracket that was searched.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unscaled result not representable in binary64.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Two independent evaluations of the same quantity disagree.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Geometry or parameter combination with no implemented formula.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A basis could not be formed; degree() names the chain degree at fault.
class RankError : public std::runtime_error {
 public:
  RankError(int degree, const std::string& what)
      : std::runtime_error("degree " + std::to_string(degree) + ": " + what), degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

}  // namespace torsionlab
