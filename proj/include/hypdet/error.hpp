#pragma once

#include <stdexcept>
#include <string>

namespace hypdet {

// Base for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (CLI exit code 3).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold (zero input, non-monic, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// No construction is available for this input (irreducible factor of
// degree >= 3 without a usable ideal witness, exhausted search, ...).
class NotConstructive : public Error {
 public:
  using Error::Error;
};

// A certificate or representation failed an exact re-check.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// Tr(ab/c) left Q[X]: the witness does not satisfy I^2 within (c/f'(alpha)).
class WelldefinednessError : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

}  // namespace hypdet
