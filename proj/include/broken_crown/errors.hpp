#pragma once

#include <stdexcept>
#include <string>

namespace broken_crown {

// Base for every error raised by the library. All of them signal either a
// caller mistake or an upstream construction bug; none are recoverable
// in-place.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class MissingArc : public Error {
 public:
  using Error::Error;
};

class NotContractible : public Error {
 public:
  using Error::Error;
};

class MalformedCycle : public Error {
 public:
  using Error::Error;
};

class PropertyViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace broken_crown
