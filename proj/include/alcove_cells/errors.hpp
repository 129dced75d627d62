#pragma once

#include <stdexcept>
#include <string>

namespace alcove_cells {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidRank : public Error {
 public:
  using Error::Error;
};

class InvalidRoot : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A search or group closure exceeded its configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// An internal postcondition failed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class IncompatiblePartitions : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace alcove_cells
