#pragma once

#include <stdexcept>
#include <string>

namespace archfactor {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (bad preset name, mismatched places,
/// missing middle splits, JSON schema violations).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A request outside the range where a formula is valid, e.g. a Deligne
/// dimension with w+1 >= 2r, or an index pair outside E_d.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested at (or too close to) a zero or pole.
class SingularityError : public Error {
 public:
  using Error::Error;
};

}  // namespace archfactor
