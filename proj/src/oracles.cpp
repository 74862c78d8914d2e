#include "matrixless/oracles.hpp"

#include <algorithm>
#include <string>

#include "matrixless/errors.hpp"

namespace matrixless {

bool PerfectGrid::all_converged() const {
  return std::all_of(converged.begin(), converged.end(), [](bool c) { return c; });
}

namespace {

Real eval_checked(const RealFunction& g, const Real& theta) {
  Real v = g(theta);
  if (!isfinite(v)) throw NumericError("g is not finite at theta = " + to_string(theta, 25));
  return v;
}

// Moves an endpoint inward until g is finite there.
Real finite_endpoint(const RealFunction& g, Real x, const Real& step, int direction) {
  for (int i = 0; i < 8; ++i) {
    if (isfinite(g(x))) return x;
    x += direction > 0 ? step : -step;
  }
  throw NumericError("g is not finite near the endpoint theta = " + to_string(x, 25));
}

}  // namespace

PerfectGrid perfect_grid(const RealFunction& g, const SpectrumSample& spectrum, const Real& tol) {
  const int bits = spectrum.bits;
  PrecisionScope scope(bits);
  const Real nudge = ldexp(Real(1), -(bits / 2));
  const Real a = finite_endpoint(g, Real::zero(bits), nudge, +1);
  const Real b = finite_endpoint(g, pi(bits), nudge, -1);
  const Real ga = g(a);
  const Real gb = g(b);
  if (ga == gb) throw NumericError("g takes the same value at both ends of (0, pi); it is not monotone");
  const bool increasing = ga < gb;
  const Real lo_val = increasing ? ga : gb;
  const Real hi_val = increasing ? gb : ga;
  const int cap = 4 * bits;

  PerfectGrid out;
  out.n = spectrum.values.size();
  out.xi.reserve(out.n);
  out.residuals.reserve(out.n);
  out.converged.reserve(out.n);
  for (const Real& target : spectrum.values) {
    const Real lambda = Real::rounded(target, bits);
    if (lambda < lo_val - tol || lambda > hi_val + tol) {
      const bool at_a = (lambda < lo_val) == increasing;
      out.xi.push_back(at_a ? a : b);
      out.residuals.push_back(abs((at_a ? ga : gb) - lambda));
      out.converged.push_back(false);
      continue;
    }
    Real lo = a, hi = b;
    Real best = a;
    Real best_res = abs(ga - lambda);
    if (abs(gb - lambda) < best_res) {
      best = b;
      best_res = abs(gb - lambda);
    }
    for (int it = 0; it < cap; ++it) {
      Real mid = ldexp(lo + hi, -1);
      if (mid == lo || mid == hi) break;
      const Real diff = eval_checked(g, mid) - lambda;
      const Real res = abs(diff);
      if (res < best_res) {
        best = mid;
        best_res = res;
      }
      if (iszero(diff)) break;
      if ((sign(diff) < 0) == increasing)
        lo = std::move(mid);
      else
        hi = std::move(mid);
    }
    out.xi.push_back(best);
    out.converged.push_back(best_res <= tol);
    out.residuals.push_back(std::move(best_res));
  }
  return out;
}

QuadratureResult fourier_coefficients_by_quadrature(const RealFunction& g, std::size_t K, int bits,
                                                    const QuadratureOptions& opts) {
  if (K == 0) throw InputError("at least one coefficient must be requested");
  if (opts.initial_points < 8 * K)
    throw InputError("quadrature needs at least 8K points (" + std::to_string(8 * K) + ")");
  PrecisionScope scope(bits);
  const Real tol = opts.tol ? *opts.tol : pow(Real(10), Real(-bits) / Real(4));
  const Real pi_b = pi(bits);

  QuadratureResult result;
  std::vector<Real> previous;
  std::vector<Real> cosk(K, Real::zero(bits));
  for (std::size_t m = opts.initial_points;; m *= 2) {
    std::vector<Real> sums(K, Real::zero(bits));
    const Real step = pi_b / Real(m);
    for (std::size_t i = 0; i < m; ++i) {
      const Real theta = (Real(i) + Real(0.5)) * step;
      const Real v = eval_checked(g, theta);
      // cos(k theta) by the three-term recurrence
      const Real c1 = cos(theta);
      const Real two_c1 = c1 + c1;
      cosk[0] = 1;
      if (K > 1) cosk[1] = c1;
      for (std::size_t k = 2; k < K; ++k) {
        mul_into(cosk[k], two_c1, cosk[k - 1]);
        cosk[k] -= cosk[k - 2];
      }
      for (std::size_t k = 0; k < K; ++k) addmul(sums[k], v, cosk[k]);
    }
    for (Real& s : sums) s /= Real(m);
    result.points = m;
    if (!previous.empty()) {
      Real change = Real::zero(bits);
      for (std::size_t k = 0; k < K; ++k) change = max(change, abs(sums[k] - previous[k]));
      result.last_change = change;
      result.converged = change <= tol;
    }
    previous = std::move(sums);
    if (result.converged || m * 2 > opts.max_points) break;
  }
  result.coeffs = std::move(previous);
  return result;
}

}  // namespace matrixless
