#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <random>
#include <vector>

#include "matrixless/dense_matrix.hpp"
#include "matrixless/real.hpp"

namespace testing_support {

using matrixless::DenseMatrix;
using matrixless::Real;

inline DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows, int bits) {
  matrixless::PrecisionScope scope(bits);
  const std::size_t n = rows.size();
  const std::size_t m = rows.begin()->size();
  DenseMatrix a(n, m, Real::zero(bits));
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (double v : r) a(i, j++) = Real(v);
    ++i;
  }
  return a;
}

// 2 - 2 sqrt(2) cos(j pi / (n + 1)), the spectrum of T_n for (-1, 2, -2),
// evaluated straight from the formula.
inline std::vector<Real> tridiagonal_closed_form(std::size_t n, int bits) {
  matrixless::PrecisionScope scope(bits);
  std::vector<Real> out;
  const Real c = Real(2) * matrixless::sqrt(Real(2));
  for (std::size_t j = 1; j <= n; ++j) {
    out.push_back(Real(2) - c * matrixless::cos(Real(j) * matrixless::pi(bits) / Real(n + 1)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Real max_abs_diff(const std::vector<Real>& a, const std::vector<Real>& b) {
  Real m = Real::zero(std::max(a.front().bits(), b.front().bits()));
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) m = matrixless::max(m, matrixless::abs(a[i] - b[i]));
  return m;
}

inline Real max_rel_diff(const std::vector<Real>& a, const std::vector<Real>& b) {
  Real m = Real::zero(std::max(a.front().bits(), b.front().bits()));
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    const Real scale = matrixless::max(Real(1e-300), matrixless::abs(b[i]));
    m = matrixless::max(m, matrixless::abs(a[i] - b[i]) / scale);
  }
  return m;
}

inline Real pow10(int e, int bits) {
  matrixless::PrecisionScope scope(bits);
  return matrixless::pow(Real(10), static_cast<long>(e));
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240531);
  return gen;
}

}  // namespace testing_support
