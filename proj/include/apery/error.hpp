#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace apery {

enum class ErrorKind {
  InvalidInput,
  NotCoprime,
  Overflow,
  NotClosed,
  NotMember,
  NotContained,
  ModulusMismatch,
  Inconsistent,
  BoundTooSmall,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::BoundTooSmall: return "BoundTooSmall";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is stable; the message is
/// for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace apery
