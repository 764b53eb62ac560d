#pragma once

#include <stdexcept>
#include <string>

namespace motivic {

/// Malformed input document (JSON shape, rational syntax, E-polynomial syntax).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a documented precondition.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input exceeds a configured size bound (ambient dimension, form count, ...).
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The bounded Euler characteristic did not stabilize. Always an internal bug.
class StabilizationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace motivic
