#pragma once

#include <stdexcept>
#include <string>

namespace graphdeblur {

// Base of every error raised by the library. Callers that only want to
// report and exit can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inconsistent dimensions, invalid parameters, missing inputs.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A computed quantity violated an integrity check (imaginary residue,
// non-finite values where finite ones are required).
class NumericError : public Error {
 public:
  using Error::Error;
};

// A spectral filter denominator vanished.
class SingularityError : public NumericError {
 public:
  using NumericError::NumericError;
};

// The GCV trace term collapsed to machine zero.
class DegenerateGcvError : public NumericError {
 public:
  using NumericError::NumericError;
};

// The adjacency matrix has zero Frobenius norm.
class DegenerateGraphError : public NumericError {
 public:
  using NumericError::NumericError;
};

// ADMM iterate became non-finite or exceeded the growth guard.
class DivergenceError : public NumericError {
 public:
  DivergenceError(const std::string& what, long iteration)
      : NumericError(what), iteration_(iteration) {}
  long iteration() const noexcept { return iteration_; }

 private:
  long iteration_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphdeblur
