#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace idiag {

enum class ErrorCode {
  EmptyInput,
  NegativeCoordinate,
  DimensionMismatch,
  PositiveDirection,
  NonpositiveWeight,
  NonpositiveScale,
  SyntaxError,
  UnknownVariable,
  NegativeExponent,
  ZeroPolynomial,
  SingularMatrix,
  InfeasibleAssignment,
  InvalidInput,
  Unbounded,
  UnsupportedDimension,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. Parse errors carry the
/// byte offset into the offending text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace idiag
