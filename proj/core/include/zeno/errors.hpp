#pragma once

#include <stdexcept>
#include <string>

namespace zeno {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix is not square, not Hermitian, or otherwise malformed for the call.
class InvalidMatrix : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A physical parameter violates its precondition (L = 0, g <= 0, ...).
class InvalidParams : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace zeno
