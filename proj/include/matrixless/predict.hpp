#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "matrixless/eigen.hpp"
#include "matrixless/expansion.hpp"
#include "matrixless/recovery.hpp"

namespace matrixless {

/// lambda~_j = sum_k c~_k(theta_{j,n}) h^k for j = 1..n, h = 1/(n+1).
struct PredictedSpectrum {
  std::size_t n = 0;
  std::vector<Real> thetas;
  std::vector<Real> values;
  Order order = Order::ascending;
  int interp_degree = 4;
  // Source table.
  std::size_t n0 = 0;
  int alpha = 0;
  int bits = 53;
  std::vector<std::string> warnings;
};

/// Local Lagrange interpolation of row k through the degree + 1 grid points
/// nearest theta. Stencils are clamped inside 1..n0 near the ends. Returns the
/// table entry when theta is a grid point. Throws InputError for theta outside
/// (0, pi), k outside 0..alpha or degree < 0.
Real interpolate_row(const ExpansionTable& table, int k, const Real& theta, int degree = 4);

struct PredictOptions {
  int interp_degree = 4;
  /// When set and classified as an RCTP, row 0 is evaluated from the series.
  const RecoveredSymbol* recovered = nullptr;
};

/// Never forms T_n. A degree above n0 - 1 is reduced with a warning.
PredictedSpectrum predict(const ExpansionTable& table, std::size_t n, const PredictOptions& opts = {});

struct ComparisonReport {
  std::vector<Real> errors;  // |predicted_j - reference_j|
  Real max_error;
  Real mean_error;
  std::size_t argmax = 0;  // 0-based index of max_error
  int reference_bits = 53;
  /// Set when the reference was computed below 128 bits and may be pseudospectral.
  bool low_precision_reference = false;
};

/// Index-wise comparison; the reference is read in the prediction's order.
/// Throws InputError on a length mismatch.
ComparisonReport compare(const PredictedSpectrum& pred, const SpectrumSample& reference);

}  // namespace matrixless
