#pragma once

#include <stdexcept>
#include <string>

namespace ncspec {

// Base for every failure the library reports. Each subclass corresponds to a
// named error condition of the public API; callers that only care about
// "something went wrong" can catch Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class AbelianGroup : public Error {
 public:
  using Error::Error;
};

class NotCompleteMultipartite : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

class DegenerateQuadratic : public Error {
 public:
  using Error::Error;
};

class NonIntegralSpectrum : public Error {
 public:
  using Error::Error;
};

class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ncspec
