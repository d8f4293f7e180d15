#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace truss {

// Base of every error raised by the library. The CLI maps each subclass to
// its own exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Structurally invalid input: self-loops, parallel edges, unknown ids,
// operations on removed edges.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A parameter outside its documented range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Refusal to run because the request exceeds a configured size or memory cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A construction that has no valid realization for the requested parameters.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace truss
