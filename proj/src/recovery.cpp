#include "matrixless/recovery.hpp"

#include "matrixless/errors.hpp"
#include "matrixless/solve.hpp"
#include "matrixless/toeplitz.hpp"

namespace matrixless {

Real default_rctp_threshold(int bits) {
  PrecisionScope scope(bits);
  if (bits == 53) return Real::parse("1e-6", bits);
  return pow(Real(10), -(Real(bits) / Real(8)));
}

std::optional<std::size_t> classify_rctp(const std::vector<Real>& ghat, const Real& threshold) {
  if (!(threshold > 0)) throw InputError("RCTP threshold must be positive");
  if (ghat.empty()) return std::nullopt;
  std::size_t m = ghat.size() - 1;
  while (m > 0 && abs(ghat[m]) <= threshold) --m;
  if (m > ghat.size() / 4) return std::nullopt;
  return m;
}

RecoveredSymbol recover(const std::vector<Real>& c0, const PrecisionContext& ctx, std::optional<Real> threshold) {
  if (c0.empty()) throw InputError("no samples to recover from");
  for (const Real& v : c0)
    if (!isfinite(v)) throw InputError("samples must be finite");
  const int bits = ctx.bits();
  PrecisionScope scope(bits);
  const std::size_t n0 = c0.size();
  DenseMatrix g(n0, n0, Real::zero(bits));
  DenseMatrix rhs(n0, 1, Real::zero(bits));
  for (std::size_t j = 0; j < n0; ++j) {
    const Real theta = grid_point(j + 1, n0, bits);
    g(j, 0) = 1;
    for (std::size_t k = 1; k < n0; ++k) g(j, k) = Real(2) * cos(Real(k) * theta);
    rhs(j, 0) = Real::rounded(c0[j], bits);
  }
  const DenseMatrix x = solve_dense(g, rhs, ctx);

  RecoveredSymbol rs;
  rs.n0 = n0;
  rs.bits = bits;
  rs.threshold = threshold ? Real::rounded(*threshold, bits) : default_rctp_threshold(bits);
  rs.ghat.reserve(n0);
  for (std::size_t k = 0; k < n0; ++k) rs.ghat.push_back(x(k, 0));
  rs.rctp_degree = classify_rctp(rs.ghat, rs.threshold);
  return rs;
}

RecoveredSymbol recover(const ExpansionTable& table, std::optional<Real> threshold) {
  return recover(table.row(0), PrecisionContext(table.bits), std::move(threshold));
}

Real eval_recovered(const RecoveredSymbol& rs, const Real& theta, std::optional<std::size_t> terms) {
  std::size_t k_max = rs.rctp_degree ? *rs.rctp_degree + 1 : rs.ghat.size();
  if (terms) {
    if (*terms > rs.ghat.size()) throw InputError("more terms requested than coefficients recovered");
    k_max = *terms;
  }
  const int bits = std::max(rs.bits, theta.bits());
  PrecisionScope scope(bits);
  if (k_max == 0) return Real::zero(bits);
  Real sum = Real::zero(bits);
  const Real c1 = cos(theta);
  const Real two_c1 = c1 + c1;
  Real prev = Real(1), cur = c1;
  for (std::size_t k = 1; k < k_max; ++k) {
    addmul(sum, rs.ghat[k], cur);
    Real next = Real::zero(bits);
    mul_into(next, two_c1, cur);
    next -= prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return rs.ghat[0] + Real(2) * sum;
}

}  // namespace matrixless
