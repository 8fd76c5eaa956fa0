#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace yh {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad construction parameters: p not prime, n < 1, index out of range...
class ParameterError : public Error {
public:
  using Error::Error;
};

// Level or precision outside the available range of a truncated object.
class PrecisionError : public Error {
public:
  using Error::Error;
};

// Operands living in different structures (other modulus, strand count, prime).
class MismatchError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " (column " + std::to_string(column) + ")"), message_(what), column_(column) {}

  // 1-based column of the offending character.
  std::size_t column() const noexcept { return column_; }
  // what() without the column suffix.
  const std::string& message() const noexcept { return message_; }

private:
  std::string message_;
  std::size_t column_;
};

}  // namespace yh
