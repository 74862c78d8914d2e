#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "matrixless/eigen.hpp"
#include "matrixless/real.hpp"

namespace matrixless {

/// A real function of theta. Evaluators receive theta at the caller's
/// precision and should return a value at that precision.
using RealFunction = std::function<Real(const Real&)>;

struct PerfectGrid {
  std::size_t n = 0;
  std::vector<Real> xi;
  std::vector<Real> residuals;  // |g(xi_j) - lambda_j|
  std::vector<bool> converged;  // false when lambda_j lies outside g's range or tol was missed

  bool all_converged() const;
};

/// Solves g(xi_j) = lambda_j on (0, pi) by bisection, at most 4 * bits steps
/// per entry. g must be strictly monotone. Endpoints where g is not finite
/// are nudged inward by 2^(-bits/2).
///
/// Throws NumericError when g takes equal values at both endpoints.
PerfectGrid perfect_grid(const RealFunction& g, const SpectrumSample& spectrum, const Real& tol);

struct QuadratureOptions {
  std::size_t initial_points = std::size_t{1} << 16;
  std::size_t max_points = std::size_t{1} << 20;
  /// Stop once two successive estimates agree to this; default 10^(-bits/4).
  std::optional<Real> tol;
};

struct QuadratureResult {
  std::vector<Real> coeffs;  // ghat_0 .. ghat_{K-1}
  std::size_t points = 0;    // midpoints on [0, pi] used by the last estimate
  Real last_change;          // max |difference| between the last two estimates
  bool converged = false;
};

/// Cosine coefficients ghat_k = (1/pi) int_0^pi g(theta) cos(k theta) dtheta of
/// an even g by the composite midpoint rule, doubling the point count until
/// successive estimates agree or max_points is reached.
///
/// Throws InputError when initial_points < 8K, NumericError naming theta when
/// g is not finite at a node.
QuadratureResult fourier_coefficients_by_quadrature(const RealFunction& g, std::size_t K, int bits,
                                                    const QuadratureOptions& opts = {});

}  // namespace matrixless
