#include "matrixless/predict.hpp"

#include <algorithm>
#include <cmath>

#include "matrixless/errors.hpp"
#include "matrixless/toeplitz.hpp"

namespace matrixless {

namespace {

// Lagrange interpolation of row k at fractional node position x, where node
// j (1-based) sits at x = j.
Real interpolate_at(const ExpansionTable& t, std::size_t k, const Real& x, int degree) {
  const long n0 = static_cast<long>(t.n0);
  const long nearest = std::lround(x.to_double());
  if (nearest >= 1 && nearest <= n0 && x == Real(nearest)) return t.c(k, static_cast<std::size_t>(nearest - 1));
  long start = static_cast<long>(std::floor(x.to_double() - (degree - 1) / 2.0));
  start = std::clamp(start, 1L, std::max(1L, n0 - degree));
  Real sum = Real::zero(x.bits());
  for (long i = start; i <= start + degree; ++i) {
    Real w = Real(1);
    for (long m = start; m <= start + degree; ++m) {
      if (m == i) continue;
      w *= (x - Real(m)) / Real(i - m);
    }
    addmul(sum, w, t.c(k, static_cast<std::size_t>(i - 1)));
  }
  return sum;
}

int effective_degree(const ExpansionTable& t, int degree) {
  if (degree < 0) throw InputError("interpolation degree must be non-negative");
  return std::min(degree, static_cast<int>(t.n0) - 1);
}

}  // namespace

Real interpolate_row(const ExpansionTable& table, int k, const Real& theta, int degree) {
  if (k < 0 || k > table.alpha) throw InputError("row index outside 0..alpha");
  const int bits = table.bits;
  PrecisionScope scope(bits);
  const Real pi_b = pi(bits);
  if (!(theta > 0) || !(theta < pi_b)) throw InputError("theta must lie in (0, pi)");
  Real x = theta * Real(table.n0 + 1) / pi_b;
  // Snap to a node when theta was itself computed as j pi / (n0 + 1).
  const Real node = Real(std::lround(x.to_double()));
  if (abs(x - node) <= Real(8) * ldexp(Real(1), 1 - bits) * x) x = node;
  return interpolate_at(table, static_cast<std::size_t>(k), x, effective_degree(table, degree));
}

PredictedSpectrum predict(const ExpansionTable& table, std::size_t n, const PredictOptions& opts) {
  if (n < 1) throw InputError("target order must be positive");
  const int bits = table.bits;
  PrecisionScope scope(bits);
  PredictedSpectrum p;
  p.n = n;
  p.order = table.order;
  p.n0 = table.n0;
  p.alpha = table.alpha;
  p.bits = bits;
  p.interp_degree = effective_degree(table, opts.interp_degree);
  if (p.interp_degree < opts.interp_degree)
    p.warnings.push_back("interpolation degree reduced to " + std::to_string(p.interp_degree) + " because n0 = " +
                         std::to_string(table.n0));
  const bool series_row0 = opts.recovered && opts.recovered->rctp_degree;

  const Real h = Real(1) / Real(n + 1);
  const Real scale = Real(table.n0 + 1) / Real(n + 1);
  p.thetas.reserve(n);
  p.values.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const Real theta = grid_point(j, n, bits);
    // Position on the table grid in index units, j (n0 + 1) / (n + 1).
    const Real x = Real(j) * scale;
    Real value = series_row0 ? eval_recovered(*opts.recovered, theta) : interpolate_at(table, 0, x, p.interp_degree);
    Real hk = Real(1);
    for (int k = 1; k <= table.alpha; ++k) {
      hk *= h;
      addmul(value, interpolate_at(table, static_cast<std::size_t>(k), x, p.interp_degree), hk);
    }
    p.thetas.push_back(theta);
    p.values.push_back(std::move(value));
  }
  return p;
}

ComparisonReport compare(const PredictedSpectrum& pred, const SpectrumSample& reference) {
  if (pred.values.size() != reference.values.size())
    throw InputError("prediction has " + std::to_string(pred.values.size()) + " values, reference has " +
                     std::to_string(reference.values.size()));
  if (pred.values.empty()) throw InputError("nothing to compare");
  const int bits = std::max(pred.bits, reference.bits);
  PrecisionScope scope(bits);
  const std::size_t n = pred.values.size();
  const bool flip = pred.order != reference.order;
  ComparisonReport r;
  r.reference_bits = reference.bits;
  r.low_precision_reference = reference.bits < 128;
  r.max_error = Real::zero(bits);
  Real total = Real::zero(bits);
  r.errors.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Real& ref = reference.values[flip ? n - 1 - j : j];
    Real e = abs(pred.values[j] - ref);
    total += e;
    if (e > r.max_error) {
      r.max_error = e;
      r.argmax = j;
    }
    r.errors.push_back(std::move(e));
  }
  r.mean_error = total / Real(n);
  return r;
}

}  // namespace matrixless
