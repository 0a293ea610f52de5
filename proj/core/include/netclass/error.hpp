#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace netclass {

// Coarse failure categories. The CLI prints the category name as a
// machine-parsable prefix, so the names are part of the external interface.
enum class ErrorKind {
  invalid_argument,  // a precondition on an argument was violated
  parse,             // malformed input text (edge list, CSV, manifest, PGM)
  io,                // filesystem failure
  disconnected,      // operation requires a connected graph
  undefined_value,   // result is mathematically undefined for this input
  capacity,          // input exceeds a hard size limit
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace netclass
