#pragma once

#include <stdexcept>
#include <string>

namespace degreecalc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class UnrepresentableSet : public Error {
 public:
  using Error::Error;
};

class InvalidInterval : public Error {
 public:
  using Error::Error;
};

class MalformedExpr : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class ZeroNotContained : public InvalidSpec {
 public:
  using InvalidSpec::InvalidSpec;
};

class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

class MalformedCertificate : public Error {
 public:
  using Error::Error;
};

/// Raised by the realiser when the engine fails to reproduce a target it
/// should have reproduced. Indicates a bug, not bad input.
class RealisationFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace degreecalc
