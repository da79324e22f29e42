#pragma once

#include <stdexcept>
#include <string>

namespace capgame {

/// Failure categories. Each maps onto one CLI exit code.
enum class ErrorKind {
  parse,         ///< malformed input document (exit 2)
  computation,   ///< numerical or algebraic failure (exit 3)
  precondition,  ///< caller violated an operation's precondition (exit 4)
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void parse_error(const std::string& what) { throw Error(ErrorKind::parse, what); }
[[noreturn]] inline void computation_error(const std::string& what) {
  throw Error(ErrorKind::computation, what);
}
[[noreturn]] inline void precondition_error(const std::string& what) {
  throw Error(ErrorKind::precondition, what);
}

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return 2;
    case ErrorKind::computation: return 3;
    case ErrorKind::precondition: return 4;
  }
  return 3;
}

}  // namespace capgame
