#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "matrixless/dense_matrix.hpp"
#include "matrixless/eigen.hpp"
#include "matrixless/precision.hpp"
#include "matrixless/symbol.hpp"

namespace matrixless {

/// Approximations c~_k(theta_{j,n0}) of the expansion functions in
/// lambda_j(T_n) ~ sum_k c_k(theta_{j,n}) h^k.
struct ExpansionTable {
  std::size_t n0 = 0;
  int alpha = 0;
  Order order = Order::ascending;
  int bits = 53;
  std::vector<std::size_t> sizes;  // n_k = 2^k (n0 + 1) - 1
  DenseMatrix c;                   // (alpha + 1) x n0, row k is c~_k
  std::vector<std::string> warnings;

  /// Row k as a vector.
  std::vector<Real> row(int k) const;
  /// theta_{j,n0} for j = 1..n0.
  std::vector<Real> thetas() const;
};

/// [2^k (n0 + 1) - 1 for k = 0..alpha]. Throws InputError for n0 < 1,
/// alpha < 0 or when the largest size overflows.
std::vector<std::size_t> nested_sizes(std::size_t n0, int alpha);

struct LevelProgress {
  int level = 0;   // 0-based
  int levels = 0;  // alpha + 1
  std::size_t order = 0;
  double seconds = 0.0;  // wall time of this level's eigensolve
};

struct ExtractOptions {
  /// Levels solved concurrently. Results do not depend on this.
  unsigned threads = 1;
  /// Called after each level finishes, from the thread that solved it.
  std::function<void(const LevelProgress&)> progress;
};

/// Row k holds the sorted spectrum of T_{n_k}(f) at indices 2^k j, j = 1..n0:
/// the eigenvalues that sit on the shared grid theta_{j,n0}.
///
/// Throws RealnessError when a level's spectrum is not real.
DenseMatrix sample_eigenvalues(const Symbol& s, std::size_t n0, int alpha, const PrecisionContext& ctx,
                               Order order = Order::ascending, const ExtractOptions& opts = {});

/// Solves V C = E with V(i, j) = hs[i]^j. The returned table has n0 =
/// E.cols(), alpha = hs.size() - 1 and sizes recovered from hs.
///
/// Throws InputError for non-positive h and SingularMatrixError for repeated h.
ExpansionTable vandermonde_solve(const std::vector<Real>& hs, const DenseMatrix& e, const PrecisionContext& ctx,
                                 Order order = Order::ascending);

/// The full extraction: nested sizes, eigenvalue sampling, Vandermonde solve.
/// A non-monotone row 0 is reported in `warnings`.
ExpansionTable extract(const Symbol& s, std::size_t n0, int alpha, const PrecisionContext& ctx,
                       Order order = Order::ascending, const ExtractOptions& opts = {});

/// True when row 0 is monotone in the table's order.
bool row0_monotone(const ExpansionTable& t);

}  // namespace matrixless
