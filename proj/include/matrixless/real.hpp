#pragma once

// Software floating point with a per-value significand width, backed by MPFR.
//
// Every Real carries its own precision. Values created without an explicit
// precision (default construction, conversion from built-in numbers) take the
// calling thread's working precision, which PrecisionScope sets. Arithmetic
// on two operands produces a result at the wider of the two precisions.

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <mpfr.h>

namespace matrixless {

/// Working precision (significand bits) of the calling thread.
int working_bits() noexcept;

/// RAII guard that sets the calling thread's working precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(int bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  int saved_;
};

class Real {
 public:
  Real() : Real(Uninitialized{}, working_bits()) { mpfr_set_zero(v_, 1); }

  template <std::integral I>
  Real(I x) : Real(Uninitialized{}, working_bits()) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>)
      mpfr_set_sj(v_, static_cast<std::intmax_t>(x), MPFR_RNDN);
    else
      mpfr_set_uj(v_, static_cast<std::uintmax_t>(x), MPFR_RNDN);
  }

  Real(double x) : Real(Uninitialized{}, working_bits()) {  // NOLINT(google-explicit-constructor)
    mpfr_set_d(v_, x, MPFR_RNDN);
  }

  /// Zero at an explicit precision.
  static Real zero(int bits) {
    Real r(Uninitialized{}, bits);
    mpfr_set_zero(r.v_, 1);
    return r;
  }

  /// Rounds `other` to `bits`.
  static Real rounded(const Real& other, int bits) {
    Real r(Uninitialized{}, bits);
    mpfr_set(r.v_, other.v_, MPFR_RNDN);
    return r;
  }

  /// Parses a decimal (or "inf"/"nan") string at `bits`. Throws InputError on
  /// malformed text.
  static Real parse(std::string_view text, int bits);

  Real(const Real& o) : Real(Uninitialized{}, o.bits()) { mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    v_[0] = o.v_[0];
    o.v_[0]._mpfr_d = nullptr;
  }
  Real& operator=(const Real& o) {
    if (this == &o) return *this;
    if (!v_[0]._mpfr_d)
      mpfr_init2(v_, o.bits());
    else if (bits() != o.bits())
      mpfr_set_prec(v_, o.bits());
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    std::swap(v_[0], o.v_[0]);
    return *this;
  }
  ~Real() {
    if (v_[0]._mpfr_d) mpfr_clear(v_);
  }

  int bits() const noexcept { return static_cast<int>(mpfr_get_prec(v_)); }

  mpfr_ptr raw() noexcept { return v_; }
  mpfr_srcptr raw() const noexcept { return v_; }

  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

  Real& operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(Uninitialized{}, wider(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(Uninitialized{}, wider(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(Uninitialized{}, wider(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(Uninitialized{}, wider(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a) {
    Real r(Uninitialized{}, a.bits());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

 private:
  struct Uninitialized {};
  Real(Uninitialized, int bits) { mpfr_init2(v_, bits); }
  static int wider(const Real& a, const Real& b) { return a.bits() > b.bits() ? a.bits() : b.bits(); }

  mpfr_t v_;
};

// Elementary functions. Results carry the argument's precision.
Real abs(const Real& x);
Real sqrt(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real asin(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
/// x * 2^e, exact.
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
/// |a| with the sign of b.
Real copysign(const Real& a, const Real& b);
Real pi(int bits);
/// 2^(1-bits), the unit roundoff of a `bits`-bit significand.
Real unit_roundoff(int bits);

bool isfinite(const Real& x) noexcept;
bool iszero(const Real& x) noexcept;
int sign(const Real& x) noexcept;
/// Binary exponent e with x = m * 2^e, 0.5 <= |m| < 1. Zero maps to 0.
long exponent(const Real& x) noexcept;

namespace detail {
/// Per-thread scratch register at `bits` precision.
mpfr_ptr scratch(int bits);
}  // namespace detail

// In-place kernels for hot loops; no heap allocation per call.
inline void addmul(Real& acc, const Real& a, const Real& b) {
  mpfr_ptr t = detail::scratch(acc.bits());
  mpfr_mul(t, a.raw(), b.raw(), MPFR_RNDN);
  mpfr_add(acc.raw(), acc.raw(), t, MPFR_RNDN);
}
inline void submul(Real& acc, const Real& a, const Real& b) {
  mpfr_ptr t = detail::scratch(acc.bits());
  mpfr_mul(t, a.raw(), b.raw(), MPFR_RNDN);
  mpfr_sub(acc.raw(), acc.raw(), t, MPFR_RNDN);
}
/// out = a * b without reallocating `out`.
inline void mul_into(Real& out, const Real& a, const Real& b) { mpfr_mul(out.raw(), a.raw(), b.raw(), MPFR_RNDN); }
inline void mul_into(double& out, double a, double b) { out = a * b; }
inline void addmul(double& acc, double a, double b) { acc += a * b; }
inline void submul(double& acc, double a, double b) { acc -= a * b; }

/// Scientific decimal representation. `digits` = 0 selects the shortest
/// count that round-trips at the value's precision.
std::string to_string(const Real& x, int digits = 0);
std::ostream& operator<<(std::ostream& os, const Real& x);

/// A complex value as an explicit (re, im) pair.
struct Complex {
  Real re;
  Real im;
};

Real abs(const Complex& z);

}  // namespace matrixless
