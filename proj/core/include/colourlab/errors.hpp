#pragma once

#include <stdexcept>
#include <string>

namespace colourlab {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the documented domain of an operation.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// The requested random object does not exist (e.g. an uncolourable graph).
class InfeasibleInstance : public Error {
 public:
  using Error::Error;
};

/// A configured cap (rejection attempts, component size, enumeration size) was hit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A formula was evaluated outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line` is 1-based; 0 means "no line information".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Too few Monte-Carlo events to form an estimate.
class InsufficientSamples : public Error {
 public:
  using Error::Error;
};

}  // namespace colourlab
