#pragma once

#include <stdexcept>
#include <string>

namespace bogo {

/// Malformed or inconsistent input (bad permutation, non-normal subgroup,
/// action that is not a homomorphism, ...). Maps to CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap (table order, engine order, enumeration budget)
/// would be exceeded. Maps to CLI exit code 3.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal consistency check failed; indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bogo
