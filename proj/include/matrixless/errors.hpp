#pragma once

#include <stdexcept>
#include <string>

namespace matrixless {

/// Malformed or out-of-contract input (files, parameters, symbol shape).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation that could not be completed at the requested precision.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed spectrum carried an imaginary part above the realness threshold.
class RealnessError : public NumericError {
 public:
  RealnessError(const std::string& what, std::string offending_value)
      : NumericError(what), offending_value_(std::move(offending_value)) {}
  const std::string& offending_value() const noexcept { return offending_value_; }

 private:
  std::string offending_value_;
};

class SingularMatrixError : public NumericError {
 public:
  SingularMatrixError(const std::string& what, std::size_t pivot_index)
      : NumericError(what), pivot_index_(pivot_index) {}
  std::size_t pivot_index() const noexcept { return pivot_index_; }

 private:
  std::size_t pivot_index_;
};

class ConvergenceError : public NumericError {
 public:
  ConvergenceError(const std::string& what, std::size_t order, int bits)
      : NumericError(what), order_(order), bits_(bits) {}
  std::size_t order() const noexcept { return order_; }
  int bits() const noexcept { return bits_; }

 private:
  std::size_t order_;
  int bits_;
};

}  // namespace matrixless
