#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpcalc {

/// Failure categories reported by the library. The CLI maps every
/// DomainError to exit status 1 and every SyntaxError to exit status 2.
enum class ErrorKind {
  UnknownVertex,
  VertexMismatch,
  AmbientMismatch,
  TorsionVertex,
  TrivialElement,
  BudgetExceeded,
  CompleteGraph,
  NotSeparating,
  Precondition,
};

char const* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  DomainError(ErrorKind kind, std::string const& message)
      : Error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed presentation or word text. `line` is 1-based, 0 when the
/// input is a single word rather than a file.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::string const& message)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gpcalc
