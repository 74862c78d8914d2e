#pragma once

#include <optional>

#include "matrixless/real.hpp"

namespace matrixless {

/// Which dense eigensolver serves a context.
///
/// `automatic` uses the platform's LAPACK (balanced dgeevx) at 53 bits, the
/// standard double-precision route that exhibits the pseudospectral failures
/// on large non-normal Toeplitz matrices, and the built-in multiprecision
/// Francis QR at every other precision. `builtin` forces the built-in solver
/// at all precisions (running on hardware doubles at 53 bits).
enum class EigenBackend { automatic, builtin };

/// Working precision plus the tolerances derived from it.
///
/// `eps` is the unit roundoff 2^(1-bits). `realness_tol` is the relative
/// threshold below which a computed imaginary part is treated as rounding
/// noise; it defaults to 2^(-bits/2) because the QR iteration on these
/// non-normal matrices loses roughly half of the working digits.
class PrecisionContext {
 public:
  explicit PrecisionContext(int bits, std::optional<Real> realness_tol = std::nullopt,
                            EigenBackend backend = EigenBackend::automatic);

  int bits() const noexcept { return bits_; }
  const Real& eps() const noexcept { return eps_; }
  const Real& realness_tol() const noexcept { return realness_tol_; }

  EigenBackend backend() const noexcept { return backend_; }

  /// True when the fast hardware-double kernels reproduce this precision.
  bool is_double() const noexcept { return bits_ == 53; }

 private:
  int bits_;
  EigenBackend backend_;
  Real eps_;
  Real realness_tol_;
};

}  // namespace matrixless
