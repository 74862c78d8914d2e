#pragma once

#include <cstddef>
#include <vector>

#include "matrixless/dense_matrix.hpp"
#include "matrixless/precision.hpp"
#include "matrixless/real.hpp"

namespace matrixless {

enum class Order { ascending, descending };

/// Sorted real eigenvalues of one matrix.
struct SpectrumSample {
  std::size_t n = 0;
  std::vector<Real> values;
  Order order = Order::ascending;
  int bits = 53;
  /// Largest |Im| zeroed when the spectrum was projected onto the real line.
  Real max_imag_discarded = Real::zero(53);
};

/// D^-1 A D for a diagonal D of powers of two that roughly equilibrates row
/// and column norms. The spectrum is unchanged in exact arithmetic.
DenseMatrix balance(const DenseMatrix& a);

/// All eigenvalues of a real square matrix at `ctx` precision.
///
/// General matrices go through balancing, Householder reduction to upper
/// Hessenberg form and the Francis double-shift QR iteration; complex
/// conjugate pairs are emitted explicitly. Exactly symmetric inputs are
/// reduced to tridiagonal form (band-preserving Givens chasing when the
/// half-bandwidth is small) and finished by implicit QL.
///
/// Throws ConvergenceError when the iteration budget (40 n sweeps) runs out.
std::vector<Complex> eigenvalues(const DenseMatrix& a, const PrecisionContext& ctx);

/// Drops imaginary parts after checking |Im| <= realness_tol * max(1, max|lambda|)
/// for every value, then sorts. Throws RealnessError otherwise.
SpectrumSample project_real_sorted(const std::vector<Complex>& eigs, const PrecisionContext& ctx,
                                   Order order = Order::ascending);

}  // namespace matrixless
