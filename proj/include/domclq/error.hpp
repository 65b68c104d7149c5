#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domclq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : what + ", line " + std::to_string(line)), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Exhaustive routines refuse inputs above their size guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace domclq
