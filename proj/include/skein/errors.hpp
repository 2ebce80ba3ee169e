#pragma once

#include <stdexcept>
#include <string>

namespace skein {

/// Raised when a rational function is divided by zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero rational function") {}
};

/// Malformed user input: diagrams, complexes, flags, files.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation was asked for a manifold, group or parameter it does not cover.
class Unsupported : public std::runtime_error {
 public:
  explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace skein
