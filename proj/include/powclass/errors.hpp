#pragma once

#include <stdexcept>
#include <string>

namespace powclass {

// Base class for every error the library raises deliberately.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: bad specs, bad files, unknown labels, invalid group
// tables, empty vector sets.
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured guard was exceeded (enumeration space, orbit size,
// canonicalization dimensions). The message names the offending quantity.
class LimitError : public Error {
 public:
  using Error::Error;
};

// An operation was invoked without its structural prerequisites, e.g. an
// inversion-dependent statistic on a ground set without a group structure.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace powclass
