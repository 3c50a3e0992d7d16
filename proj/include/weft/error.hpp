#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weft {

enum class ErrorCode {
  DuplicateNode,
  UnknownNode,
  TypeMismatch,
  InvalidName,
  DuplicateLayer,
  UnknownLayer,
  WrongLayerMode,
  SelfTieForbidden,
  DuplicateHyperedge,
  UnknownHyperedge,
  InboundUnavailable,
  ArithmeticOverflow,
  NonEmptyLayer,
  InvalidParameter,
  InvalidK,
  InvalidM,
  AlreadySymmetric,
  UnsupportedMethod,
  MalformedHeader,
  TypeParseError,
  UnknownNodeInEdge,
  MalformedSection,
  UnknownLayerHeaderKey,
  FormatError,
  IoError,
  SyntaxError,
  UnknownCommand,
  ArityError,
  TypeError,
  UnknownObject,
  InvalidObject,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All engine failures surface as this exception; `code()` identifies the
/// failure class, `what()` carries a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace weft
