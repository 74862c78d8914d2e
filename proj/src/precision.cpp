#include "matrixless/precision.hpp"

#include <string>

#include "matrixless/errors.hpp"

namespace matrixless {

PrecisionContext::PrecisionContext(int bits, std::optional<Real> realness_tol, EigenBackend backend)
    : bits_(bits), backend_(backend), eps_(unit_roundoff(bits)), realness_tol_(Real::zero(bits)) {
  if (bits < 53) throw InputError("precision must be at least 53 bits, got " + std::to_string(bits));
  if (realness_tol) {
    if (!(*realness_tol > 0)) throw InputError("realness tolerance must be positive");
    realness_tol_ = Real::rounded(*realness_tol, bits);
  } else {
    realness_tol_ = ldexp(Real::rounded(Real(1), bits), -(bits / 2));
  }
  if (realness_tol_ < eps_) realness_tol_ = eps_;
}

}  // namespace matrixless
