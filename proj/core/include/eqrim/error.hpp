#pragma once

#include <stdexcept>

namespace eqrim {

/// Malformed or out-of-domain input supplied by a caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that could not be parsed (partitions, polynomials, JSON payloads).
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// A well-formed value that violates a shape precondition, e.g. a partition
/// that does not fit in the k x (n-k) box.
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

/// An internal consistency check failed. Always a bug (or a corrupted cache).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact integer arithmetic left the range of the coefficient type.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace eqrim
