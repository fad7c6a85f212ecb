#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace roughlat {

/// Malformed or mismatched input: unknown labels, universe mismatch, axiom violations.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A 2^|U| or element-count guard was hit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The hypothesis of a theorem-backed operation does not hold for the given input.
class HypothesisUnmet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File parse error with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t row, std::size_t column)
      : std::runtime_error("row " + std::to_string(row) + ", column " + std::to_string(column) + ": " + what),
        row_(row),
        column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

/// Prints the message and aborts. Used when independently computed answers disagree.
[[noreturn]] void internal_fault(const std::string& what);

}  // namespace roughlat
