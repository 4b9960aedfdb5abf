#pragma once

#include <stdexcept>
#include <string>

namespace toag {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands that belong to different group instances or structures.
class MixedInstanceError : public Error {
 public:
  using Error::Error;
};

/// A partial operation was applied outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (structure specs, element literals, table files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace toag
