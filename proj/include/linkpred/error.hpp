#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linkpred {

enum class ErrorKind {
  kMalformedInput,
  kInvalidPair,
  kInvalidParameter,
  kTooSmall,
  kExhausted,
  kDegenerateLabels,
  kDegenerateFold,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedInput: return "malformed input";
    case ErrorKind::kInvalidPair: return "invalid pair";
    case ErrorKind::kInvalidParameter: return "invalid parameter";
    case ErrorKind::kTooSmall: return "too small";
    case ErrorKind::kExhausted: return "exhausted";
    case ErrorKind::kDegenerateLabels: return "degenerate labels";
    case ErrorKind::kDegenerateFold: return "degenerate fold";
  }
  return "unknown";
}

/// Every recoverable failure in the library is reported as an Error carrying
/// its category, so callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const char* message) {
  if (!condition) fail(kind, message);
}

}  // namespace detail
}  // namespace linkpred
