#include "netclass/error.hpp"

namespace netclass {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::parse: return "parse";
    case ErrorKind::io: return "io";
    case ErrorKind::disconnected: return "disconnected";
    case ErrorKind::undefined_value: return "undefined_value";
    case ErrorKind::capacity: return "capacity";
  }
  return "unknown";
}

}  // namespace netclass
