#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperfact {

enum class ErrorKind {
  EmptySum,
  ZeroOperand,
  DegreeBoundExceeded,
  NotARoot,
  ConstantPolynomial,
  InternalInvariantViolated,
  SearchLimitExceeded,
  Parse,
  Domain,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptySum: return "EmptySum";
    case ErrorKind::ZeroOperand: return "ZeroOperand";
    case ErrorKind::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorKind::InternalInvariantViolated: return "InternalInvariantViolated";
    case ErrorKind::SearchLimitExceeded: return "SearchLimitExceeded";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Domain: return "DomainError";
  }
  return "Unknown";
}

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed text input. `column` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t column, const std::string& what)
      : Error(ErrorKind::Parse, "column " + std::to_string(column) + ": " + what), column_(column), reason_(what) {}

  std::size_t column() const noexcept { return column_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t column_;
  std::string reason_;
};

}  // namespace hyperfact
