#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcs {

// Base for every error thrown by the library. The CLI maps CapacityError to
// exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A value violates a type invariant (negative weight, duplicate edge, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The graph lacks structure an operation needs, e.g. an empty out-neighborhood.
class StructureError : public Error {
 public:
  using Error::Error;
};

// A documented size cap was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcs
