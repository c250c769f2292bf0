#pragma once

#include <stdexcept>
#include <string>

namespace covred {

/// Error categories; the numeric values are the CLI exit codes.
enum class ErrorKind : int {
  usage = 1,
  validation = 2,
  limit = 3,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage: return "usage";
    case ErrorKind::validation: return "validation";
    case ErrorKind::limit: return "limit";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace covred
