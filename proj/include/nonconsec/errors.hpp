#pragma once

#include <stdexcept>

namespace nonconsec {

/// Thrown when an argument violates a documented precondition: malformed
/// one-line notation, a pattern of unsupported length, a permutation outside
/// the domain of a bijection, or an oracle request above the ceiling.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when two computations that must agree by construction disagree, or
/// when an exported series coefficient fails the integrality assertion.
/// Signals a bug in this library, not a caller error.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nonconsec
