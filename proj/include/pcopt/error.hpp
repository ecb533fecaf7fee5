#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace pcopt {

enum class ErrorKind { parse, precondition, budget, not_applicable, internal };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

struct ParseError : Error {
  explicit ParseError(const std::string &what) : Error(ErrorKind::parse, what) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string &what)
      : Error(ErrorKind::precondition, what) {}
};

// A construction whose hypotheses do not hold for the given input.
struct NotApplicableError : Error {
  explicit NotApplicableError(const std::string &what)
      : Error(ErrorKind::not_applicable, what) {}
};

// Raised when a routine's own output fails independent validation.
struct InternalError : Error {
  explicit InternalError(const std::string &what)
      : Error(ErrorKind::internal, what) {}
};

struct BudgetError : Error {
  explicit BudgetError(const std::string &what,
                       std::optional<int> upper_bound = std::nullopt,
                       std::optional<std::size_t> partial_count = std::nullopt)
      : Error(ErrorKind::budget, what), upper_bound(upper_bound),
        partial_count(partial_count) {}

  std::optional<int> upper_bound;
  std::optional<std::size_t> partial_count;
};

// Exit status used by the command line front end for each error kind.
inline int exit_code(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::parse:
    return 2;
  case ErrorKind::budget:
    return 3;
  case ErrorKind::precondition:
  case ErrorKind::not_applicable:
    return 4;
  case ErrorKind::internal:
    return 5;
  }
  return 5;
}

} // namespace pcopt
