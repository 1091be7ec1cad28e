#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dflab {

enum class ErrorKind {
  InvalidInput,
  NotFullDimensional,
  NonLatticeVertex,
  InconsistentVertices,
  NonUnimodularChartVertex,
  PointOutsidePolytope,
  ChainViolation,
  UnsupportedMode,
  NonPositiveExceptionalRay,
  NotStabilized,
  ExponentTooSmall,
  CrossCheckFailure,
};

std::string_view kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a sampled sequence is not (yet) polynomial. A nonzero
/// quasi_period means the tail matched a quasi-polynomial of that period,
/// which happens when the exponent r is too small for L^r(-E) to be
/// semiample.
class NotStabilizedError : public Error {
 public:
  NotStabilizedError(const std::string& message, int quasi_period)
      : Error(ErrorKind::NotStabilized, message), quasi_period_(quasi_period) {}

  int quasi_period() const noexcept { return quasi_period_; }

 private:
  int quasi_period_;
};

}  // namespace dflab
