#pragma once

#include <stdexcept>

namespace taildep {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An argument or parameter is outside its admissible range.
struct InvalidInputError : Error {
  using Error::Error;
};

/// Too few observations for the requested operation.
struct InsufficientDataError : Error {
  using Error::Error;
};

/// Malformed file content or model spec string.
struct ParseError : Error {
  using Error::Error;
};

/// Filesystem-level failure (open, read, write).
struct IoError : Error {
  using Error::Error;
};

/// Two series share no common months.
struct AlignError : Error {
  using Error::Error;
};

/// Conditional-inversion root find did not converge.
struct SamplerError : Error {
  using Error::Error;
};

}  // namespace taildep
