#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace glis {

enum class ErrorKind {
  kInvalidArgument,
  kDimensionMismatch,
  kNonFinite,
  kNotPositiveDefinite,
  kInfeasible,
  kUnbounded,
  kInfeasibleConstraints,
  kDegenerateBox,
  kLowFeasibleVolume,
  kNotFullDimensional,
  kCoincidentPoint,
  kDuplicatePoint,
  kInvalidPhase,
  kUnknownBenchmark,
  kEnumerationBoundExceeded,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace glis
