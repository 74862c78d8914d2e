#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "matrixless/expansion.hpp"
#include "matrixless/precision.hpp"
#include "matrixless/real.hpp"

namespace matrixless {

/// Cosine coefficients of g(theta) = ghat_0 + 2 sum_k ghat_k cos(k theta),
/// fitted to samples on theta_{j,n0}.
struct RecoveredSymbol {
  std::vector<Real> ghat;  // ghat_0 .. ghat_{n0-1}
  std::optional<std::size_t> rctp_degree;
  Real threshold;
  std::size_t n0 = 0;
  int bits = 53;
};

/// 1e-6 at 53 bits, 10^(-bits/8) above.
Real default_rctp_threshold(int bits);

/// Smallest m with |ghat_k| <= threshold for all k > m, provided m <= n0/4.
/// Throws InputError for a non-positive threshold.
std::optional<std::size_t> classify_rctp(const std::vector<Real>& ghat, const Real& threshold);

/// Solves the n0 x n0 collocation system
///   ghat_0 + 2 sum_{k=1}^{n0-1} ghat_k cos(k theta_{j,n0}) = c0[j]
/// and classifies the result against `threshold` (default_rctp_threshold).
RecoveredSymbol recover(const std::vector<Real>& c0, const PrecisionContext& ctx,
                        std::optional<Real> threshold = std::nullopt);

/// Recovery from row 0 of a table, at the table's precision.
RecoveredSymbol recover(const ExpansionTable& table, std::optional<Real> threshold = std::nullopt);

/// Partial cosine sum with `terms` coefficients; defaults to rctp_degree + 1
/// when classified, otherwise all n0.
Real eval_recovered(const RecoveredSymbol& rs, const Real& theta, std::optional<std::size_t> terms = std::nullopt);

}  // namespace matrixless
