#ifndef CIA_ERRORS_HPP
#define CIA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cia {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An index (row, column, cell, variable) lies outside the ring or grid.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different rings or over different fields.
class IncompatibleError : public Error {
 public:
  using Error::Error;
};

/// Malformed arguments: unequal minor sizes, bad hypergraph, empty input.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the regime an operation is defined for.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// A configured resource limit (pairs, degree, terms, points, time) was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input; the message names the offending location.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cia

#endif  // CIA_ERRORS_HPP
