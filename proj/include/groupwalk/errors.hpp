#pragma once

#include <stdexcept>
#include <string>

namespace groupwalk {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or out-of-domain element encoding.
struct ElementError : Error {
  using Error::Error;
};

// Operands owned by different groups.
struct GroupMismatchError : Error {
  using Error::Error;
};

// Operation not defined for the group kind (e.g. enumerating an infinite group).
struct UnsupportedError : Error {
  using Error::Error;
};

// Caller violated an operation precondition (bad parameter range, non-commuting
// factors, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// A configured resource cap (support size, ball radius, grid horizon) was hit.
struct ResourceError : Error {
  using Error::Error;
};

// Bad input text; message carries enough position info to locate the offender.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace groupwalk
