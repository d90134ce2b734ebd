#pragma once

#include <stdexcept>
#include <string>

namespace ilsconn {

// Malformed arguments: bad indices, wrong shapes, unparsable numbers.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Arguments are well formed but violate an operation's precondition.
class PreconditionError : public InputError {
public:
  using InputError::InputError;
};

// The instance exceeds an enumeration or search guard.
class CapabilityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Always a bug.
class DefectError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace ilsconn
