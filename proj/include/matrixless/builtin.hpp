#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matrixless/oracles.hpp"
#include "matrixless/symbol.hpp"

namespace matrixless::builtin {

/// (fhat_1, fhat_0, fhat_-1) = (-1, 2, -2).
Symbol tridiagonal(int bits);
/// 1, -4, 6, -4, 1 centered at 0; f(theta) = (2 - 2 cos theta)^2.
Symbol bilaplacian(int bits);
/// The bi-Laplacian stencil shifted one diagonal: f = e^{-i theta} (2 - 2 cos theta)^2.
Symbol shifted_bilaplacian(int bits);
/// fhat_3..fhat_-4 = 1, -1, 7, 0, 9, -2, 2, -1. No closed-form g.
Symbol seven_band(int bits);

/// g(theta) = 2 - 2 sqrt(2) cos theta.
Real g_tridiagonal(const Real& theta);
/// g(theta) = 16 sin^4(theta / 2).
Real g_bilaplacian(const Real& theta);
/// g(theta) = -sin^4(theta) / (sin(theta/4) sin^3(3 theta/4)), range (-256/27, 0).
Real g_shifted_bilaplacian(const Real& theta);

/// Names accepted by g_by_name: tridiagonal, bilaplacian, shifted-bilaplacian.
const std::vector<std::string>& g_names();
std::optional<RealFunction> g_by_name(std::string_view name);

}  // namespace matrixless::builtin
