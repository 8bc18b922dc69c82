#pragma once

#include <stdexcept>
#include <string>

namespace sortnet {

// Input violates an operation's precondition (bad box, non-staircase shape,
// invalid network, malformed window...). The CLI maps this to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or missing external data (JSON files, data directory).
// The CLI maps this to exit code 3.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size cap was exceeded (enumeration, exact packing).
class CapacityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An internal consistency check failed; indicates a bug or numeric drift.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sortnet
