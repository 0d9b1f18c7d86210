#pragma once

#include <stdexcept>

namespace combsim {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (bad number literal, wrong row/column count, ...).
struct ParseError : Error {
  using Error::Error;
};

// A semimetric axiom is violated; the message names the axiom and location.
struct ValidationError : Error {
  using Error::Error;
};

// Permutations of different degree combined.
struct DegreeMismatch : Error {
  using Error::Error;
};

// Spaces (or a space and a bijection) of different size combined.
struct SizeMismatch : Error {
  using Error::Error;
};

// An exhaustive enumeration was requested beyond its configured cap.
struct DegreeTooLarge : Error {
  using Error::Error;
};

// Element set is not closed under composition; message carries a witness pair.
struct NotClosed : Error {
  using Error::Error;
};

struct MissingIdentity : Error {
  using Error::Error;
};

struct EmptySubset : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct NonPositiveParameter : Error {
  using Error::Error;
};

struct BadBlockCount : Error {
  using Error::Error;
};

struct InvalidRGS : Error {
  using Error::Error;
};

struct TooFewPoints : Error {
  using Error::Error;
};

// A file could not be opened or read.
struct IoError : Error {
  using Error::Error;
};

// Bad command-line usage (unknown example name, out-of-domain parameter, ...).
struct UsageError : Error {
  using Error::Error;
};

// An internal cross-check failed. Deliberately loud: this either means a bug
// or a counterexample to a property the library promises to uphold.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace combsim
