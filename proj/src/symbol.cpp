#include "matrixless/symbol.hpp"

#include <algorithm>

#include "matrixless/errors.hpp"

namespace matrixless {

Symbol::Symbol(int min_k, std::vector<Real> coeffs) : min_k_(min_k), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InputError("symbol has no coefficients");
  if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const Real& c) { return iszero(c); }))
    throw InputError("symbol has no nonzero coefficient");
  for (const Real& c : coeffs_)
    if (!isfinite(c)) throw InputError("symbol coefficient is not finite");
  const int bits = coeffs_.front().bits();
  for (Real& c : coeffs_)
    if (c.bits() != bits) c = Real::rounded(c, bits);
}

Symbol Symbol::parse(int min_k, const std::vector<std::string>& coeffs, int bits) {
  std::vector<Real> values;
  values.reserve(coeffs.size());
  for (const std::string& s : coeffs) values.push_back(Real::parse(s, bits));
  return Symbol(min_k, std::move(values));
}

Real Symbol::coeff(int k) const {
  if (k < min_k_ || k > max_k()) return Real::zero(bits());
  return coeffs_[static_cast<std::size_t>(k - min_k_)];
}

Symbol Symbol::with_bits(int bits) const {
  std::vector<Real> values;
  values.reserve(coeffs_.size());
  for (const Real& c : coeffs_) values.push_back(Real::rounded(c, bits));
  return Symbol(min_k_, std::move(values));
}

}  // namespace matrixless
