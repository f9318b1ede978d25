#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace udyn {

enum class ErrorKind {
  InvalidArgument,
  ParseError,
  ZeroDivisor,
  InvalidExtension,
  PrecisionExhausted,
  PoleHit,
  DegenerateParams,
  NeedsCriticalValue,
  InvalidRegime,
  WrongSphere,
  UnsupportedRadius,
  Overflow,
};

std::string_view to_string(ErrorKind kind);

/// Domain error carrying the name of the condition that raised it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace udyn
