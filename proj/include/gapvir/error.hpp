#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gapvir {

enum class ErrorKind {
  DivisionByZero,
  NotReal,
  Parse,
  Configuration,
  Integrity,
  Unsupported,
  UnsupportedParameter,
  Domain,
  Index,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::NotReal: return "not-real";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Configuration: return "configuration";
    case ErrorKind::Integrity: return "integrity";
    case ErrorKind::Unsupported: return "unsupported-involution";
    case ErrorKind::UnsupportedParameter: return "unsupported-parameter";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Index: return "index";
  }
  return "unknown";
}

/// Every failure raised by the library. `kind()` is stable and is what the
/// CLI and tests dispatch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gapvir
