#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invunits {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input; line and column are 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::string const& what, std::size_t line = 0,
             std::size_t column = 0);

  std::size_t line() const noexcept { return _line; }
  std::size_t column() const noexcept { return _column; }

 private:
  std::size_t _line;
  std::size_t _column;
};

// A precondition of a mathematical operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace invunits
