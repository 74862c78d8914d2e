#include "matrixless/eigen.hpp"

#include <algorithm>
#include <string>

#include <lapacke.h>

#include "detail/eigen_kernels.hpp"
#include "matrixless/errors.hpp"

namespace matrixless {

namespace {

void require_square_finite(const DenseMatrix& a) {
  if (!a.square()) throw InputError("matrix must be square");
  for (const Real& v : a.data())
    if (!isfinite(v)) throw InputError("matrix has non-finite entries");
}

Matrix<double> to_double(const DenseMatrix& a) {
  Matrix<double> out(a.rows(), a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).to_double();
  return out;
}

DenseMatrix rounded_copy(const DenseMatrix& a, int bits) {
  DenseMatrix out(a.rows(), a.cols(), Real::zero(bits));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = Real::rounded(a(i, j), bits);
  return out;
}

// Balanced LAPACK dgeevx, eigenvalues only. Symmetric inputs take the
// built-in symmetric path, which is backward stable for normal matrices.
void lapack_eigenvalues(const Matrix<double>& a, std::vector<double>& wr, std::vector<double>& wi) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  std::vector<double> work(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) work[j * a.rows() + i] = a(i, j);
  wr.assign(a.rows(), 0.0);
  wi.assign(a.rows(), 0.0);
  std::vector<double> scale(a.rows()), rconde(a.rows()), rcondv(a.rows());
  lapack_int ilo = 0, ihi = 0;
  double abnrm = 0.0;
  const lapack_int info =
      LAPACKE_dgeevx(LAPACK_COL_MAJOR, 'B', 'N', 'N', 'N', n, work.data(), n, wr.data(), wi.data(), nullptr, 1,
                     nullptr, 1, &ilo, &ihi, scale.data(), &abnrm, rconde.data(), rcondv.data());
  if (info > 0)
    throw ConvergenceError("LAPACK dgeevx did not converge for matrix of order " + std::to_string(n) + " at 53 bits",
                           static_cast<std::size_t>(n), 53);
  if (info < 0) throw NumericError("LAPACK dgeevx rejected argument " + std::to_string(-info));
}

}  // namespace

DenseMatrix balance(const DenseMatrix& a) {
  require_square_finite(a);
  if (a.rows() == 0) return a;
  PrecisionScope scope(a(0, 0).bits());
  DenseMatrix out = a;
  detail::balance_inplace(out);
  return out;
}

std::vector<Complex> eigenvalues(const DenseMatrix& a, const PrecisionContext& ctx) {
  require_square_finite(a);
  const int bits = ctx.bits();
  std::vector<Complex> out;
  out.reserve(a.rows());
  if (ctx.is_double()) {
    std::vector<double> wr, wi;
    const double eps = 0x1p-52;
    Matrix<double> ad = to_double(a);
    if (ctx.backend() == EigenBackend::automatic && !detail::is_symmetric(ad))
      lapack_eigenvalues(ad, wr, wi);
    else
      detail::dense_eigenvalues(std::move(ad), eps, wr, wi, bits);
    PrecisionScope scope(53);
    for (std::size_t i = 0; i < wr.size(); ++i) out.push_back({Real(wr[i]), Real(wi[i])});
    return out;
  }
  PrecisionScope scope(bits);
  std::vector<Real> wr, wi;
  detail::dense_eigenvalues(rounded_copy(a, bits), ctx.eps(), wr, wi, bits);
  for (std::size_t i = 0; i < wr.size(); ++i) out.push_back({std::move(wr[i]), std::move(wi[i])});
  return out;
}

SpectrumSample project_real_sorted(const std::vector<Complex>& eigs, const PrecisionContext& ctx, Order order) {
  if (eigs.empty()) throw InputError("cannot project an empty spectrum");
  PrecisionScope scope(ctx.bits());
  Real radius = Real::zero(ctx.bits());
  for (const Complex& z : eigs) radius = max(radius, abs(z));
  const Real threshold = ctx.realness_tol() * max(Real(1), radius);

  SpectrumSample sample;
  sample.n = eigs.size();
  sample.order = order;
  sample.bits = ctx.bits();
  sample.max_imag_discarded = Real::zero(ctx.bits());
  sample.values.reserve(eigs.size());
  for (const Complex& z : eigs) {
    const Real im = abs(z.im);
    if (im > threshold)
      throw RealnessError("Spectrum not real: eigenvalue " + to_string(z.re, 20) + (sign(z.im) < 0 ? " - " : " + ") +
                              to_string(im, 20) + "i exceeds the realness threshold " + to_string(threshold, 6) +
                              " at " + std::to_string(ctx.bits()) +
                              " bits. Decrease n0 or alpha, or use higher precision.",
                          to_string(z.re) + (sign(z.im) < 0 ? "-" : "+") + to_string(im) + "i");
    sample.max_imag_discarded = max(sample.max_imag_discarded, im);
    sample.values.push_back(Real::rounded(z.re, ctx.bits()));
  }
  if (order == Order::ascending)
    std::sort(sample.values.begin(), sample.values.end());
  else
    std::sort(sample.values.begin(), sample.values.end(), [](const Real& x, const Real& y) { return y < x; });
  return sample;
}

}  // namespace matrixless
