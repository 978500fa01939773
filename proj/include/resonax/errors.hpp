#pragma once

#include <stdexcept>
#include <string>

namespace resonax {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (x <= 0 on the half-line, a
// centrifugal singularity at the origin, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Nonlinear parameters missing, superfluous, or outside the validity region.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

// A (basis, potential term) combination with no matrix-element route.
class Unsupported : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, int index) : Error(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace resonax
