#pragma once

#include <stdexcept>
#include <string>

namespace simwords {

enum class ErrorKind {
  kInvalidParams,
  kLengthMismatch,
  kEmptyFactor,
  kLetterOutOfRange,
  kInconsistentTrace,
  kMalformedLog,
  kMalformedInput,
  kNotProlongable,
  kImageEmpty,
};

// Library-wide exception; `kind` drives the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace simwords
