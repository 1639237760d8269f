#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pntlab {

// Base of every error raised by the library. The CLI maps IoError to exit
// code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of the formula being evaluated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Constants handed to a constructor violate the family's constraints.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A zero sum was requested beyond the height covered by the zero set.
class CoverageError : public Error {
 public:
  using Error::Error;
};

// Theorem hypotheses (growth conditions on omega) do not hold.
class ConditionError : public Error {
 public:
  using Error::Error;
};

// A request exceeds the desk-scale caps (sieve limit, search cap).
class LimitError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input file; carries the 1-based line number of the offence.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class MonotonicityError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace pntlab
