#pragma once

#include <stdexcept>
#include <string>

namespace todorov {

/// Malformed input: bad JSON, dimension mismatch, asymmetric gram, broken point forest.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that fails a mathematical precondition (invalid
/// configuration, descent exhausted, no admissible component, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace todorov
