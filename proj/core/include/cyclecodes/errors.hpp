#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclecodes {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A search or table would exceed the configured size budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t best_known = 0)
      : std::runtime_error(what), best_known_(best_known) {}

  /// Best lower bound found before giving up (0 when nothing was attempted).
  std::size_t best_known() const noexcept { return best_known_; }

 private:
  std::size_t best_known_;
};

/// Numerical failure inside a kernel (no sign change, LP breakdown, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file; carries the offending 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cyclecodes
