#pragma once

#include <stdexcept>
#include <string>

namespace teich {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Inconsistent configuration: mismatched primes, malformed config input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Truncation window too small for the requested identity check.
class WindowError : public Error {
 public:
  using Error::Error;
};

class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, int required)
      : Error(what), required_precision_(required) {}

  int required_precision() const noexcept { return required_precision_; }

 private:
  int required_precision_;
};

// A consequence was requested whose hypothesis (the main bound) does not hold.
class BoundNotEstablished : public Error {
 public:
  using Error::Error;
};

}  // namespace teich
