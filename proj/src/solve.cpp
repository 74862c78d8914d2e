#include "matrixless/solve.hpp"

#include <string>
#include <utility>

#include "matrixless/errors.hpp"

namespace matrixless {

DenseMatrix solve_dense(const DenseMatrix& a, const DenseMatrix& b, const PrecisionContext& ctx) {
  if (!a.square()) throw InputError("solve_dense: coefficient matrix must be square");
  if (a.rows() != b.rows()) throw InputError("solve_dense: right-hand side has the wrong number of rows");
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  const int bits = ctx.bits();
  PrecisionScope scope(bits);

  DenseMatrix lu(n, n, Real::zero(bits));
  DenseMatrix x(n, m, Real::zero(bits));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) lu(i, j) = Real::rounded(a(i, j), bits);
    for (std::size_t j = 0; j < m; ++j) x(i, j) = Real::rounded(b(i, j), bits);
  }
  const Real floor = ctx.eps() * norm_inf(lu);

  Real factor = Real::zero(bits);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (abs(lu(i, k)) > abs(lu(piv, k))) piv = i;
    if (!(abs(lu(piv, k)) > floor))
      throw SingularMatrixError("matrix is singular to working precision at pivot " + std::to_string(k), k);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      for (std::size_t j = 0; j < m; ++j) std::swap(x(k, j), x(piv, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (iszero(lu(i, k))) continue;
      factor = lu(i, k) / lu(k, k);
      for (std::size_t j = k + 1; j < n; ++j) submul(lu(i, j), factor, lu(k, j));
      for (std::size_t j = 0; j < m; ++j) submul(x(i, j), factor, x(k, j));
      lu(i, k) = Real::zero(bits);
    }
  }
  for (std::size_t kk = n; kk-- > 0;) {
    for (std::size_t j = 0; j < m; ++j) {
      Real& v = x(kk, j);
      for (std::size_t c = kk + 1; c < n; ++c) submul(v, lu(kk, c), x(c, j));
      v /= lu(kk, kk);
    }
  }
  return x;
}

}  // namespace matrixless
