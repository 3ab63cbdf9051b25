#pragma once

#include <stdexcept>
#include <string>

namespace addcomb {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different groups, or the group kind does not support the
// requested operation.
class GroupMismatch : public Error {
 public:
  using Error::Error;
};

// Argument outside the operation's domain (empty set, non-invertible
// dilation, composite modulus, violated lemma hypothesis, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Integer-window arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Exhaustive computation would exceed the configured size cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A machine check of a proven inclusion failed. Always an implementation bug.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace addcomb
