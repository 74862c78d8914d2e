#include "matrixless/real.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "matrixless/errors.hpp"

namespace matrixless {

namespace {
thread_local int g_working_bits = 53;

template <typename F>
Real unary(const Real& x, F&& f) {
  Real r = Real::zero(x.bits());
  f(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
}  // namespace

namespace detail {
mpfr_ptr scratch(int bits) {
  struct Register {
    mpfr_t v;
    Register() { mpfr_init2(v, 53); }
    ~Register() { mpfr_clear(v); }
  };
  thread_local Register reg;
  if (mpfr_get_prec(reg.v) != bits) mpfr_set_prec(reg.v, bits);
  return reg.v;
}
}  // namespace detail

int working_bits() noexcept { return g_working_bits; }

PrecisionScope::PrecisionScope(int bits) : saved_(g_working_bits) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX)
    throw InputError("precision out of range: " + std::to_string(bits));
  g_working_bits = bits;
}

PrecisionScope::~PrecisionScope() { g_working_bits = saved_; }

Real Real::parse(std::string_view text, int bits) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw InputError("empty numeric literal");
  Real r = zero(bits);
  if (mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN) != 0)
    throw InputError("malformed numeric literal: '" + s + "'");
  return r;
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real asin(const Real& x) { return unary(x, mpfr_asin); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }

Real pow(const Real& x, const Real& y) {
  Real r = Real::zero(std::max(x.bits(), y.bits()));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r = Real::zero(x.bits());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r = Real::zero(x.bits());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real copysign(const Real& a, const Real& b) {
  Real r = Real::zero(a.bits());
  mpfr_copysign(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Real pi(int bits) {
  Real r = Real::zero(bits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real unit_roundoff(int bits) {
  Real r = Real::zero(bits);
  mpfr_set_ui_2exp(r.raw(), 1, 1 - bits, MPFR_RNDN);
  return r;
}

bool isfinite(const Real& x) noexcept { return mpfr_number_p(x.raw()) != 0; }
bool iszero(const Real& x) noexcept { return mpfr_zero_p(x.raw()) != 0; }
int sign(const Real& x) noexcept { return mpfr_sgn(x.raw()); }

long exponent(const Real& x) noexcept {
  if (!mpfr_regular_p(x.raw())) return 0;
  return static_cast<long>(mpfr_get_exp(x.raw()));
}

std::string to_string(const Real& x, int digits) {
  if (mpfr_nan_p(x.raw())) return "nan";
  if (mpfr_inf_p(x.raw())) return sign(x) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(x.raw())) return mpfr_signbit(x.raw()) ? "-0" : "0";
  std::size_t n = digits > 0 ? static_cast<std::size_t>(digits)
                             : mpfr_get_str_ndigits(10, mpfr_get_prec(x.raw()));
  mpfr_exp_t e10 = 0;
  char* raw = mpfr_get_str(nullptr, &e10, 10, n, x.raw(), MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string out;
  std::size_t pos = 0;
  if (mant[0] == '-') {
    out += '-';
    pos = 1;
  }
  out += mant[pos];
  if (mant.size() > pos + 1) {
    out += '.';
    out.append(mant, pos + 1, std::string::npos);
  }
  long exp10 = static_cast<long>(e10) - 1;
  out += 'e';
  out += exp10 < 0 ? '-' : '+';
  std::string ed = std::to_string(exp10 < 0 ? -exp10 : exp10);
  if (ed.size() < 2) out += '0';
  out += ed;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << to_string(x); }

Real abs(const Complex& z) {
  Real r = Real::zero(std::max(z.re.bits(), z.im.bits()));
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}

}  // namespace matrixless
