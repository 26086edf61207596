#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace homcover {

enum class ErrorKind {
  InvalidSpec,
  NotAGroup,
  InvalidPQ,
  OrderCapExceeded,
  ClosureCapExceeded,
  EnumerationCapExceeded,
  LatticeCapExceeded,
  CoverTooLarge,
  NotNormal,
  NotADivisor,
  NotSimple,
  PreconditionViolated,
  IndexOutOfRange,
  ArithmeticOverflow,
  IoError,
};

std::string_view error_name(ErrorKind kind) noexcept;

// True for the errors that mean "the computation is too large for the
// configured caps" rather than "the input is wrong".
bool is_cap_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace homcover
