#include "udyn/error.hpp"

namespace udyn {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::InvalidExtension: return "InvalidExtension";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::DegenerateParams: return "DegenerateParams";
    case ErrorKind::NeedsCriticalValue: return "NeedsCriticalValue";
    case ErrorKind::InvalidRegime: return "InvalidRegime";
    case ErrorKind::WrongSphere: return "WrongSphere";
    case ErrorKind::UnsupportedRadius: return "UnsupportedRadius";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace udyn
