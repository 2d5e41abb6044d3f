#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace graphcodes {

using BigInt = boost::multiprecision::cpp_int;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAPrimePower : public Error {
 public:
  explicit NotAPrimePower(long long q);
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in GF(q)") {}
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its cap. `required()` is the size the caller
/// must allow for the operation to proceed.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string what, BigInt required, BigInt cap);
  const BigInt& required() const noexcept { return required_; }
  const BigInt& cap() const noexcept { return cap_; }

 private:
  BigInt required_;
  BigInt cap_;
};

/// Minimum-distance search refused or ran out of budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, BigInt required, BigInt budget);
  const BigInt& required() const noexcept { return required_; }
  const BigInt& budget() const noexcept { return budget_; }

 private:
  BigInt required_;
  BigInt budget_;
};

// Ear decomposition validation failures.
class NotADecomposition : public Error {
 public:
  using Error::Error;
};
class NotOpen : public Error {
 public:
  using Error::Error;
};
class NotNested : public Error {
 public:
  using Error::Error;
};

// Internal consistency guards. Seeing one of these means a bug.
class LengthMismatch : public Error {
 public:
  LengthMismatch(BigInt observed, BigInt expected);
  const BigInt& observed() const noexcept { return observed_; }
  const BigInt& expected() const noexcept { return expected_; }

 private:
  BigInt observed_;
  BigInt expected_;
};
class MonotonicityViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace graphcodes
