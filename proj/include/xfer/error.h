#pragma once

#include <stdexcept>
#include <string>

namespace xfer {

// Base class for every error raised by the library. Callers that only need to
// report a failure can catch this; the subclasses exist for the handful of
// call sites that react differently (the HTTP layer maps them to status codes).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class LexError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace xfer
