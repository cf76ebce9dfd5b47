#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sfg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numeric parameter is outside its admissible range (p < 1, sigma <= 0, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Input violates a data invariant (birth >= death, non-finite coordinate, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An exhaustive oracle or expansion refused an instance that is too large.
class Refusal : public Error {
 public:
  using Error::Error;
};

}  // namespace sfg
