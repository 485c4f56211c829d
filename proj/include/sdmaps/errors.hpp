#pragma once

#include <stdexcept>
#include <string>

namespace sdmaps {

// Base class for every error raised by the library. The CLI maps these onto
// exit codes, so each subclass corresponds to one failure category.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class UndefinedGcd : public Error {
 public:
  UndefinedGcd() : Error("gcd of two zero polynomials is undefined") {}
};

class UndefinedRoots : public Error {
 public:
  UndefinedRoots() : Error("roots of the zero polynomial are undefined") {}
};

class PoleError : public Error {
 public:
  explicit PoleError(const std::string& at) : Error("pole at " + at) {}
};

class FieldMismatch : public Error {
 public:
  explicit FieldMismatch(const std::string& what) : Error("field mismatch: " + what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InvalidPair : public Error {
 public:
  InvalidPair() : Error("invalid pair: x == y") {}
};

// f(x) == f(y) for x != y: the right-hand side of the SD equation is undefined.
class InjectivityViolation : public Error {
 public:
  InjectivityViolation(std::string x, std::string y, std::string fx)
      : Error("injectivity violation: f(" + x + ") = f(" + y + ") = " + fx),
        x_(std::move(x)),
        y_(std::move(y)),
        fx_(std::move(fx)) {}

  const std::string& x() const noexcept { return x_; }
  const std::string& y() const noexcept { return y_; }
  const std::string& fx() const noexcept { return fx_; }

 private:
  std::string x_, y_, fx_;
};

class RecurrenceDegenerate : public Error {
 public:
  explicit RecurrenceDegenerate(int n)
      : Error("recurrence degenerate: entry " + std::to_string(n) + " is identically 1"), n_(n) {}
  int n() const noexcept { return n_; }

 private:
  int n_;
};

class ZeroTermEncountered : public Error {
 public:
  explicit ZeroTermEncountered(long k)
      : Error("zero term encountered at k = " + std::to_string(k)), k_(k) {}
  long k() const noexcept { return k_; }

 private:
  long k_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  explicit NotPrime(long long n) : Error(std::to_string(n) + " is not prime") {}
  explicit NotPrime(const std::string& what) : Error(what) {}
};

// Structured search and an oracle disagree. This is the classifier's
// self-check and is always a hard failure.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace sdmaps
