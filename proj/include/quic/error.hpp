#pragma once

#include <stdexcept>
#include <string>

namespace quic {

enum class ErrorCode {
  InvalidParameter,
  LengthMismatch,
  OutOfRange,
  InconsistentOracle,
  RewireExhausted,
  DisconnectedBase,
  IsolatedVertex,
  SizeCeiling,
  NegativeEntry,
  InsufficientShots,
  Parse,
};

const char *to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a family or configuration parameter is out of its domain.
/// `field()` names the offending parameter.
class InvalidParameter : public Error {
 public:
  InvalidParameter(std::string field, const std::string &why)
      : Error(ErrorCode::InvalidParameter, "invalid parameter '" + field + "': " + why),
        field_(std::move(field)) {}

  const std::string &field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace quic
