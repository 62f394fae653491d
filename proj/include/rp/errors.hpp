#pragma once

#include <stdexcept>
#include <string>

namespace rp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called with inputs outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A certificate that was required to hold could not be established.
class CertificationError : public Error {
 public:
  using Error::Error;
};

/// Malformed or schema-violating serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace rp
