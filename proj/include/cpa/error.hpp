#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cpa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line()` is 1-based; 0 means "no specific line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A mathematical or structural invariant does not hold (duplicate weights,
/// a Poincaré coefficient that came out negative, a non-integral interpolant).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// The requested chromatic engine cannot handle this input.
class EnginePreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace cpa
