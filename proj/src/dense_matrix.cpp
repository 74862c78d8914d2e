#include "matrixless/dense_matrix.hpp"

#include "matrixless/errors.hpp"

namespace matrixless {

DenseMatrix identity_matrix(std::size_t n, int bits) {
  DenseMatrix out(n, n, Real::zero(bits));
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Real::rounded(Real(1), bits);
  return out;
}

Real norm_inf(const DenseMatrix& a) {
  Real best = Real::zero(a.rows() ? a(0, 0).bits() : 53);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Real sum = Real::zero(best.bits());
    for (std::size_t j = 0; j < a.cols(); ++j) sum += abs(a(i, j));
    best = max(best, sum);
  }
  return best;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix dimensions do not agree");
  const int bits = a.rows() && a.cols() ? a(0, 0).bits() : 53;
  DenseMatrix out(a.rows(), b.cols(), Real::zero(bits));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) addmul(out(i, j), a(i, k), b(k, j));
  return out;
}

}  // namespace matrixless
