#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xgratio {

// Root of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of the function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Fractional moment requested outside the window -1 < k < 1.
class MomentExistenceError : public DomainError {
 public:
  explicit MomentExistenceError(double k);
  double order() const noexcept { return k_; }

 private:
  double k_;
};

// Entropy order equal to 1 (the generalized families degenerate there).
class OrderError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Entropy order at or below 1/2, where the power integral diverges.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Root bracket without a sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

// Quadrature could not reach the requested tolerance. Carries the best
// estimate seen so far together with its error bound.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double estimate, double error_bound);
  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

// Observed data is malformed or outside the support. `location` is the
// zero-based index into the batch, or the 1-based line number when the
// error originates from a file reader.
class DataError : public Error {
 public:
  DataError(const std::string& what, std::size_t location);
  explicit DataError(const std::string& what);
  std::size_t location() const noexcept { return location_; }
  bool has_location() const noexcept { return has_location_; }

 private:
  std::size_t location_ = 0;
  bool has_location_ = false;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace xgratio
