#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hkfun {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in prime field") {}
};

/// Raised by the polynomial and input-document parsers. `position` is a
/// zero-based byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different rings") {}
};

/// A precondition of an operation does not hold (wrong dimension, bad q, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotMPrimary : public PreconditionError {
 public:
  explicit NotMPrimary(const std::string& what)
      : PreconditionError("not m-primary: " + what) {}
};

class NotHomogeneous : public PreconditionError {
 public:
  explicit NotHomogeneous(const std::string& what)
      : PreconditionError("not homogeneous: " + what) {}
};

/// The Groebner pair budget ran out. Never accompanied by a partial result.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::size_t budget)
      : Error("Groebner budget exhausted after " + std::to_string(budget) + " pairs"),
        budget_(budget) {}
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

class ElementSelectionFailed : public Error {
 public:
  ElementSelectionFailed(const std::string& what, unsigned long long failing_q)
      : Error("element selection failed: " + what), failing_q_(failing_q) {}
  unsigned long long failing_q() const noexcept { return failing_q_; }

 private:
  unsigned long long failing_q_;
};

/// An exact identity that a decomposition step relies on did not hold.
class CertificateViolation : public Error {
 public:
  using Error::Error;
};

/// A library invariant was violated; signals a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hkfun
