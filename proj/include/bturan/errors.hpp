#pragma once

#include <stdexcept>
#include <string>

namespace bturan {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Exact integer result does not fit in 64 bits.
class Overflow : public Error {
 public:
  using Error::Error;
};

// Input is larger than a configured work cap.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

class MalformedInput : public Error {
 public:
  using Error::Error;
};

}  // namespace bturan
