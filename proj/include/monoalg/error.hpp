#pragma once

#include <stdexcept>
#include <string>

namespace monoalg {

// Malformed tables, symbolic expressions, or arguments outside an operation's
// precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A brute-force search or an explicit enumeration would exceed its
// configured size limit.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// decompose() was handed an algebra whose levels have non-uniform preimage
// counts.
class NotUltrahomogeneous : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

}  // namespace monoalg
