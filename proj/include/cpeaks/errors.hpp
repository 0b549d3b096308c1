#pragma once

#include <stdexcept>
#include <string>

namespace cpeaks {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive oracle was asked to run beyond its enumeration cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Malformed input: bad permutation, out-of-range set element, bad Dyck word.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain where a quantity is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A peak set that fails the i_j >= 2j+1 criterion where a valid one is required.
class ValidityError : public Error {
 public:
  ValidityError(int index, int value, int bound)
      : Error("peak set is not realizable: element " + std::to_string(index) +
              " is " + std::to_string(value) + " < " + std::to_string(bound)),
        index_(index), value_(value), bound_(bound) {}

  int index() const noexcept { return index_; }
  int value() const noexcept { return value_; }
  int bound() const noexcept { return bound_; }

 private:
  int index_;
  int value_;
  int bound_;
};

// Exact arithmetic produced something that is not representable in the
// target ring (a non-integral count, a non-polynomial series coefficient).
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

}  // namespace cpeaks
