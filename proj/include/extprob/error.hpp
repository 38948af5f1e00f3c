#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace extprob {

enum class ErrorKind {
  DivisionByZero,
  Unlimited,
  ZeroConditioningEvent,
  EmptyConditioningEvent,
  AlgebraMismatch,
  LengthMismatch,
  NotAnSlps,
  InvalidPopperSpace,
  NotTreelike,
  KindMismatch,
  ShapeMismatch,
  InvalidArgument,
  TooLarge,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported through this type;
/// kind() lets callers (and the CLI) map failures without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace extprob
