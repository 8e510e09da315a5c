#pragma once

#include <stdexcept>
#include <string>

namespace privclust {

// Base for every error raised by the library. The CLI maps InvalidArgument
// and Unsupported to usage errors and the rest to data/numeric errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (dimension mismatch, k > n, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input is well-formed but numerically degenerate (zero direction vector,
// identical points, no nonzero differences, ...).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// Parameter combination the algorithm deliberately does not handle.
class Unsupported : public Error {
 public:
  using Error::Error;
};

// Malformed file contents. Message names the offending location.
class ParseError : public Error {
 public:
  using Error::Error;
};

// File could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace privclust
