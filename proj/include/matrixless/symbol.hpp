#pragma once

#include <string>
#include <vector>

#include "matrixless/real.hpp"

namespace matrixless {

/// A banded symbol f(theta) = sum_k fhat_k e^{ik theta}, stored as the
/// Fourier coefficients fhat_{min_k} .. fhat_{max_k}.
///
/// Entry (i, j) of T_n(f) is fhat_{i-j}: positive indices fill the lower
/// triangle, negative ones the upper triangle.
class Symbol {
 public:
  /// Throws InputError for an empty band or an all-zero band.
  Symbol(int min_k, std::vector<Real> coeffs);

  /// Parses decimal strings at `bits`, never going through binary doubles.
  static Symbol parse(int min_k, const std::vector<std::string>& coeffs, int bits);

  int min_k() const noexcept { return min_k_; }
  int max_k() const noexcept { return min_k_ + static_cast<int>(coeffs_.size()) - 1; }
  int bits() const noexcept { return coeffs_.front().bits(); }
  const std::vector<Real>& coeffs() const noexcept { return coeffs_; }

  /// fhat_k, zero outside the band.
  Real coeff(int k) const;

  /// The same coefficients rounded to `bits`.
  Symbol with_bits(int bits) const;

 private:
  int min_k_;
  std::vector<Real> coeffs_;
};

}  // namespace matrixless
