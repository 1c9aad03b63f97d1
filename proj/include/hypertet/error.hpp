#pragma once

#include <stdexcept>
#include <string>

namespace hypertet {

// Stable numeric values; the C API forwards them unchanged.
enum class ErrorCode {
  invalid_argument = 1,
  domain = 2,
  not_a_tetrahedron = 3,
  not_in_closure = 4,
  inconsistency = 5,
  accuracy = 6,
  evaluation = 7,
  sampling = 8,
  precondition = 9,
  near_degenerate = 10,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Argument outside the domain of an operation; carries the offending value.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, double value)
      : Error(ErrorCode::domain, what), value_(value) {}
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// Angle data that does not describe a truncated tetrahedron. `index` is the
/// vertex (0..3) or edge position (0..5) that failed, -1 if not localized.
class NotATetrahedron : public Error {
 public:
  NotATetrahedron(const std::string& what, int index)
      : Error(ErrorCode::not_a_tetrahedron, what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// An iterative method stopped before reaching its tolerance.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double best_estimate)
      : Error(ErrorCode::accuracy, what), best_estimate_(best_estimate) {}
  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

}  // namespace hypertet
