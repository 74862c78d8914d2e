#pragma once

#include <cstddef>
#include <vector>

#include "matrixless/dense_matrix.hpp"
#include "matrixless/eigen.hpp"
#include "matrixless/real.hpp"
#include "matrixless/symbol.hpp"

namespace matrixless {

/// theta_{j,n} = j pi / (n + 1). Nested grids agree bit for bit:
/// grid_point(2^k j, 2^k (n + 1) - 1) == grid_point(j, n).
Real grid_point(std::size_t j, std::size_t n, int bits);

/// The uniform grid theta_{j,n}, j = 1..n, with h = 1 / (n + 1).
struct SampledGrid {
  std::size_t n = 0;
  std::vector<Real> points;
  Real h;
};

SampledGrid sampled_grid(std::size_t n, int bits);

/// Dense T_n(f) with entry (i, j) = fhat_{i-j} at the symbol's precision.
DenseMatrix build_toeplitz(const Symbol& s, std::size_t n);

/// f(theta) summed over the band.
Complex eval_symbol(const Symbol& s, const Real& theta);

/// For a tridiagonal symbol with fhat_1 * fhat_-1 > 0, the symmetric symbol g
/// with ghat_0 = fhat_0 and ghat_{+-1} = sqrt(fhat_1) sqrt(fhat_-1), so that
/// T_n(f) and T_n(g) are diagonally similar. Principal square roots fix the
/// sign: two negative off-diagonals give a negative ghat_1.
///
/// Throws InputError for other bands or when fhat_1 * fhat_-1 <= 0.
Symbol symmetrize_tridiagonal(const Symbol& s);

/// Closed-form spectrum g(theta_{j,n}) of a symmetrizable tridiagonal T_n(f),
/// sorted ascending.
SpectrumSample tridiag_exact_eigenvalues(const Symbol& s, std::size_t n);

/// True when the band is within {-1, 0, 1} and fhat_1 * fhat_-1 > 0.
bool is_symmetrizable_tridiagonal(const Symbol& s);

}  // namespace matrixless
