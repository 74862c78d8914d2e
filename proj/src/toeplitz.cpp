#include "matrixless/toeplitz.hpp"

#include <algorithm>

#include "matrixless/errors.hpp"

namespace matrixless {

Real grid_point(std::size_t j, std::size_t n, int bits) {
  PrecisionScope scope(bits);
  return Real(j) * pi(bits) / Real(n + 1);
}

SampledGrid sampled_grid(std::size_t n, int bits) {
  if (n == 0) throw InputError("grid size must be positive");
  PrecisionScope scope(bits);
  SampledGrid grid;
  grid.n = n;
  grid.h = Real(1) / Real(n + 1);
  grid.points.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) grid.points.push_back(grid_point(j, n, bits));
  return grid;
}

DenseMatrix build_toeplitz(const Symbol& s, std::size_t n) {
  if (n == 0) throw InputError("matrix order must be positive");
  const int bits = s.bits();
  DenseMatrix t(n, n, Real::zero(bits));
  const long ln = static_cast<long>(n);
  for (int k = s.min_k(); k <= s.max_k(); ++k) {
    const Real& c = s.coeffs()[static_cast<std::size_t>(k - s.min_k())];
    if (iszero(c)) continue;
    // diagonal i - j = k
    for (long i = std::max(0L, static_cast<long>(k)); i < ln && i - k < ln; ++i) {
      if (i - k < 0) continue;
      t(static_cast<std::size_t>(i), static_cast<std::size_t>(i - k)) = c;
    }
  }
  return t;
}

Complex eval_symbol(const Symbol& s, const Real& theta) {
  const int bits = std::max(s.bits(), theta.bits());
  PrecisionScope scope(bits);
  Complex z{Real::zero(bits), Real::zero(bits)};
  for (int k = s.min_k(); k <= s.max_k(); ++k) {
    const Real& c = s.coeffs()[static_cast<std::size_t>(k - s.min_k())];
    if (iszero(c)) continue;
    const Real arg = Real(k) * theta;
    addmul(z.re, c, cos(arg));
    addmul(z.im, c, sin(arg));
  }
  return z;
}

bool is_symmetrizable_tridiagonal(const Symbol& s) {
  if (s.min_k() < -1 || s.max_k() > 1) return false;
  return s.coeff(1) * s.coeff(-1) > 0;
}

Symbol symmetrize_tridiagonal(const Symbol& s) {
  if (s.min_k() < -1 || s.max_k() > 1)
    throw InputError("symmetrization needs a tridiagonal symbol (band within {-1, 0, 1})");
  const int bits = s.bits();
  PrecisionScope scope(bits);
  const Real lower = s.coeff(1);
  const Real upper = s.coeff(-1);
  if (!(lower * upper > 0))
    throw InputError("fhat_1 * fhat_-1 must be positive; otherwise the spectrum is complex");
  Real off = sqrt(lower * upper);
  if (sign(lower) < 0) off = -off;
  return Symbol(-1, {off, s.coeff(0), off});
}

SpectrumSample tridiag_exact_eigenvalues(const Symbol& s, std::size_t n) {
  const Symbol g = symmetrize_tridiagonal(s);
  const int bits = g.bits();
  PrecisionScope scope(bits);
  SpectrumSample out;
  out.n = n;
  out.bits = bits;
  out.order = Order::ascending;
  out.max_imag_discarded = Real::zero(bits);
  out.values.reserve(n);
  const Real two_off = Real(2) * g.coeff(1);
  for (std::size_t j = 1; j <= n; ++j) out.values.push_back(g.coeff(0) + two_off * cos(grid_point(j, n, bits)));
  std::sort(out.values.begin(), out.values.end());
  return out;
}

}  // namespace matrixless
