#pragma once

#include <stdexcept>
#include <string>

namespace sqfree {

/// Malformed or out-of-range user input (bad file, bad degree, violated
/// precondition on caller-supplied data).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural fact that must hold for every valid input did not hold.
/// Seeing one of these means a bug, not bad data.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sqfree
