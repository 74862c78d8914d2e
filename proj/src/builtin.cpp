#include "matrixless/builtin.hpp"

namespace matrixless::builtin {

Symbol tridiagonal(int bits) { return Symbol::parse(-1, {"-2", "2", "-1"}, bits); }

Symbol bilaplacian(int bits) { return Symbol::parse(-2, {"1", "-4", "6", "-4", "1"}, bits); }

Symbol shifted_bilaplacian(int bits) { return Symbol::parse(-3, {"1", "-4", "6", "-4", "1"}, bits); }

Symbol seven_band(int bits) { return Symbol::parse(-4, {"-1", "2", "-2", "9", "0", "7", "-1", "1"}, bits); }

Real g_tridiagonal(const Real& theta) {
  PrecisionScope scope(theta.bits());
  return Real(2) - Real(2) * sqrt(Real(2)) * cos(theta);
}

Real g_bilaplacian(const Real& theta) {
  PrecisionScope scope(theta.bits());
  const Real s = sin(ldexp(theta, -1));
  const Real s2 = s * s;
  return Real(16) * s2 * s2;
}

Real g_shifted_bilaplacian(const Real& theta) {
  PrecisionScope scope(theta.bits());
  const Real s = sin(theta);
  const Real s2 = s * s;
  const Real d = sin(ldexp(theta, -2) * Real(3));
  return -(s2 * s2) / (sin(ldexp(theta, -2)) * d * d * d);
}

const std::vector<std::string>& g_names() {
  static const std::vector<std::string> names{"tridiagonal", "bilaplacian", "shifted-bilaplacian"};
  return names;
}

std::optional<RealFunction> g_by_name(std::string_view name) {
  if (name == "tridiagonal") return RealFunction(g_tridiagonal);
  if (name == "bilaplacian") return RealFunction(g_bilaplacian);
  if (name == "shifted-bilaplacian") return RealFunction(g_shifted_bilaplacian);
  return std::nullopt;
}

}  // namespace matrixless::builtin
