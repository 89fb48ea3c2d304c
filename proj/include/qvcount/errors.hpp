#pragma once

#include <stdexcept>
#include <string>

namespace qvc {

// Every library failure derives from Error so callers (the CLI in particular)
// can map the category onto an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: rationals, integer lists, quiver files.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Vector lengths disagree with the quiver's vertex count.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input the library deliberately does not handle (indefinite type, loops, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A documented size cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace qvc
