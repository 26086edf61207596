#include "homcover/error.hpp"

namespace homcover {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::InvalidPQ: return "InvalidPQ";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::LatticeCapExceeded: return "LatticeCapExceeded";
    case ErrorKind::CoverTooLarge: return "CoverTooLarge";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_cap_error(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::OrderCapExceeded:
    case ErrorKind::ClosureCapExceeded:
    case ErrorKind::EnumerationCapExceeded:
    case ErrorKind::LatticeCapExceeded:
    case ErrorKind::CoverTooLarge:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_name(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace homcover
