#include <random>

#include "doctest.h"
#include "matrixless/builtin.hpp"
#include "matrixless/eigen.hpp"
#include "matrixless/errors.hpp"
#include "matrixless/oracles.hpp"
#include "matrixless/toeplitz.hpp"
#include "support.hpp"

using namespace matrixless;
using namespace testing_support;

TEST_CASE("build_toeplitz: tridiagonal display") {
  const DenseMatrix t = build_toeplitz(builtin::tridiagonal(53), 3);
  const double expected[3][3] = {{2, -2, 0}, {-1, 2, -2}, {0, -1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(t(i, j).to_double() == expected[i][j]);
}

TEST_CASE("build_toeplitz: bi-Laplacian pentadiagonal and scaled identity") {
  const DenseMatrix t = build_toeplitz(builtin::bilaplacian(53), 5);
  const double expected[5][5] = {
      {6, -4, 1, 0, 0}, {-4, 6, -4, 1, 0}, {1, -4, 6, -4, 1}, {0, 1, -4, 6, -4}, {0, 0, 1, -4, 6}};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(t(i, j).to_double() == expected[i][j]);

  const DenseMatrix c = build_toeplitz(Symbol::parse(0, {"3.5"}, 128), 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(c(i, j) == (i == j ? Real(3.5) : Real(0)));
}

TEST_CASE("build_toeplitz: shifted and seven-band first rows") {
  const DenseMatrix s = build_toeplitz(builtin::shifted_bilaplacian(53), 6);
  const double row0[6] = {-4, 6, -4, 1, 0, 0};
  const double row1[6] = {1, -4, 6, -4, 1, 0};
  for (int j = 0; j < 6; ++j) {
    CHECK(s(0, j).to_double() == row0[j]);
    CHECK(s(1, j).to_double() == row1[j]);
  }
  const DenseMatrix b = build_toeplitz(builtin::seven_band(53), 8);
  const double b0[8] = {0, 9, -2, 2, -1, 0, 0, 0};
  const double b3[8] = {1, -1, 7, 0, 9, -2, 2, -1};
  for (int j = 0; j < 8; ++j) {
    CHECK(b(0, j).to_double() == b0[j]);
    CHECK(b(3, j).to_double() == b3[j]);
  }
}

TEST_CASE("build_toeplitz: constant diagonals, exhaustive for small n") {
  std::uniform_int_distribution<int> width(0, 4);
  std::uniform_int_distribution<int> val(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = width(rng()), s = width(rng());
    std::vector<std::string> coeffs;
    for (int k = -r; k <= s; ++k) coeffs.push_back(std::to_string(val(rng())));
    coeffs[static_cast<std::size_t>(r)] = "11";
    const Symbol sym = Symbol::parse(-r, coeffs, 64);
    for (std::size_t n = 1; n <= 20; ++n) {
      const DenseMatrix t = build_toeplitz(sym, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          CHECK(t(i, j) == sym.coeff(static_cast<int>(i) - static_cast<int>(j)));
    }
  }
}

TEST_CASE("symbol: validation") {
  CHECK_THROWS_AS(Symbol::parse(0, {}, 64), InputError);
  CHECK_THROWS_AS(Symbol::parse(-1, {"0", "0"}, 64), InputError);
  CHECK_THROWS_AS(Symbol::parse(0, {"abc"}, 64), InputError);
  const Symbol s = Symbol::parse(-2, {"1", "2", "3"}, 64);
  CHECK(s.max_k() == 0);
  CHECK(iszero(s.coeff(1)));
  CHECK(s.coeff(-2) == Real(1));
}

TEST_CASE("eval_symbol: direct sums") {
  const Complex z = eval_symbol(builtin::tridiagonal(128), Real::zero(128));
  CHECK(z.re == Real(-1));
  CHECK(iszero(z.im));
  const Complex p = eval_symbol(builtin::bilaplacian(128), pi(128));
  CHECK(abs(p.re - Real(16)) < pow10(-35, 128));
}

TEST_CASE("eval_symbol: symmetric bands are real at random theta") {
  const Symbol s = Symbol::parse(-3, {"0.5", "-1.25", "3", "7", "3", "-1.25", "0.5"}, 128);
  Real bound = Real::zero(128);
  for (const Real& c : s.coeffs()) bound += abs(c);
  bound *= ldexp(Real(1), -127);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    PrecisionScope scope(128);
    const Complex z = eval_symbol(s, Real(u(rng())));
    CHECK(abs(z.im) <= Real(4) * bound);
  }
}

TEST_CASE("symmetrize_tridiagonal") {
  PrecisionScope scope(128);
  const Symbol g = symmetrize_tridiagonal(builtin::tridiagonal(128));
  CHECK(abs(g.coeff(1) + sqrt(Real(2))) < pow10(-35, 128));
  CHECK(g.coeff(1) == g.coeff(-1));
  CHECK(g.coeff(0) == Real(2));

  const Symbol fixed = symmetrize_tridiagonal(Symbol::parse(-1, {"3", "5", "3"}, 128));
  CHECK(fixed.coeff(1) == Real(3));
  const Symbol neg = symmetrize_tridiagonal(Symbol::parse(-1, {"-3", "5", "-3"}, 128));
  CHECK(neg.coeff(1) == Real(-3));

  const Symbol four_cos = symmetrize_tridiagonal(Symbol::parse(-1, {"4", "0", "1"}, 128));
  CHECK(four_cos.coeff(1) == Real(2));
  CHECK(iszero(four_cos.coeff(0)));

  CHECK_THROWS_AS(symmetrize_tridiagonal(builtin::bilaplacian(128)), InputError);
  CHECK_THROWS_AS(symmetrize_tridiagonal(Symbol::parse(-1, {"1", "2", "-1"}, 128)), InputError);
  CHECK_THROWS_AS(symmetrize_tridiagonal(Symbol::parse(-1, {"0", "2", "1"}, 128)), InputError);
}

TEST_CASE("tridiag_exact_eigenvalues") {
  PrecisionScope scope(128);
  const SpectrumSample s = tridiag_exact_eigenvalues(builtin::tridiagonal(128), 5);
  const std::vector<Real> expected{Real(2) - sqrt(Real(6)), Real(2) - sqrt(Real(2)), Real(2), Real(2) + sqrt(Real(2)),
                                   Real(2) + sqrt(Real(6))};
  CHECK(max_abs_diff(s.values, expected) < pow10(-35, 128));
  CHECK(s.order == Order::ascending);

  const SpectrumSample one = tridiag_exact_eigenvalues(builtin::tridiagonal(128), 1);
  CHECK(abs(one.values[0] - Real(2)) < pow10(-35, 128));
}

TEST_CASE("tridiag_exact_eigenvalues agrees with the eigensolver") {
  for (int bits : {53, 128}) {
    const PrecisionContext ctx(bits);
    const Symbol f = builtin::tridiagonal(bits);
    for (std::size_t n : {5u, 31u, 100u}) {
      if (bits == 53 && n == 100) continue;  // LAPACK at 53 bits is already inaccurate here
      const SpectrumSample exact = tridiag_exact_eigenvalues(f, n);
      const SpectrumSample computed = project_real_sorted(eigenvalues(build_toeplitz(f, n), ctx), ctx);
      CHECK_MESSAGE(max_abs_diff(exact.values, computed.values) <= pow(Real(2), Real(-bits) / Real(4)),
                    "bits = " << bits << ", n = " << n);
    }
  }
}

TEST_CASE("grid: nesting is exact") {
  for (std::size_t k = 0; k <= 5; ++k) {
    const std::size_t scale = std::size_t{1} << k;
    for (std::size_t j = 1; j <= 31; ++j)
      CHECK(grid_point(scale * j, scale * 32 - 1, 128) == grid_point(j, 31, 128));
  }
  const SampledGrid g = sampled_grid(10, 128);
  CHECK(g.points.size() == 10);
  for (std::size_t i = 1; i < 10; ++i) CHECK(g.points[i - 1] < g.points[i]);
  CHECK(abs(g.h * Real(11) - Real(1)) <= ldexp(Real(1), -126));
}

TEST_CASE("perfect_grid: bi-Laplacian closed form") {
  const int bits = 128;
  const PrecisionContext ctx(bits);
  const SpectrumSample s = project_real_sorted(eigenvalues(build_toeplitz(builtin::bilaplacian(bits), 20), ctx), ctx);
  const PerfectGrid pg = perfect_grid(builtin::g_bilaplacian, s, pow10(-30, bits));
  CHECK(pg.all_converged());
  PrecisionScope scope(bits);
  for (std::size_t j = 0; j < s.values.size(); ++j) {
    const Real closed = Real(2) * asin(sqrt(sqrt(s.values[j])) / Real(2));
    CHECK(abs(pg.xi[j] - closed) < pow10(-30, bits));
    if (j > 0) CHECK(pg.xi[j - 1] < pg.xi[j]);
  }
}

TEST_CASE("perfect_grid: descending cosine and out-of-range flags") {
  PrecisionScope scope(128);
  SpectrumSample s;
  s.n = 3;
  s.bits = 128;
  s.values = {Real(0), Real(3), Real(-0.5)};
  const PerfectGrid pg = perfect_grid([](const Real& t) { return cos(t); }, s, pow10(-30, 128));
  CHECK(abs(pg.xi[0] - pi(128) / Real(2)) < pow10(-30, 128));
  CHECK(!pg.converged[1]);
  CHECK(pg.converged[2]);
  CHECK(abs(pg.xi[2] - Real(2) * pi(128) / Real(3)) < pow10(-30, 128));
  CHECK_THROWS_AS(perfect_grid([](const Real&) { return Real(1); }, s, Real(1)), NumericError);
}

TEST_CASE("perfect_grid: shifted bi-Laplacian closed-form g at n = 5") {
  const int bits = 128;
  const PrecisionContext ctx(bits);
  const SpectrumSample s =
      project_real_sorted(eigenvalues(build_toeplitz(builtin::shifted_bilaplacian(bits), 5), ctx), ctx);
  const PerfectGrid pg = perfect_grid(builtin::g_shifted_bilaplacian, s, pow10(-20, bits));
  CHECK(pg.all_converged());
  for (const Real& r : pg.residuals) CHECK(r <= pow10(-20, bits));
}

TEST_CASE("quadrature: trigonometric polynomial and constant") {
  const int bits = 128;
  QuadratureOptions opts;
  opts.initial_points = 256;
  opts.max_points = 4096;
  const auto g = [](const Real& t) {
    PrecisionScope scope(t.bits());
    return Real(6) - Real(8) * cos(t) + Real(2) * cos(Real(2) * t);
  };
  const QuadratureResult r = fourier_coefficients_by_quadrature(g, 6, bits, opts);
  CHECK(r.converged);
  const double expected[6] = {6, -4, 1, 0, 0, 0};
  for (int k = 0; k < 6; ++k) CHECK(abs(r.coeffs[k] - Real(expected[k])) < pow10(-30, bits));

  const QuadratureResult c = fourier_coefficients_by_quadrature([](const Real&) { return Real(2.5); }, 4, bits, opts);
  CHECK(abs(c.coeffs[0] - Real(2.5)) < pow10(-30, bits));
  for (int k = 1; k < 4; ++k) CHECK(abs(c.coeffs[k]) < pow10(-30, bits));

  opts.initial_points = 16;
  CHECK_THROWS_AS(fourier_coefficients_by_quadrature(g, 6, bits, opts), InputError);
}

TEST_CASE("quadrature: shifted bi-Laplacian reproduces the reference coefficients") {
  QuadratureOptions opts;
  opts.initial_points = 1024;
  opts.max_points = 1 << 14;
  opts.tol = pow10(-20, 128);
  const QuadratureResult r = fourier_coefficients_by_quadrature(builtin::g_shifted_bilaplacian, 5, 128, opts);
  CHECK(r.converged);
  const char* reference[5] = {"-4.000000000000000", "-2.423215805461417", "-0.354481702999765", "0.046583829909932",
                              "-0.013008232443064"};
  // The reference values carry 15 decimals and about 1e-15 of their own quadrature error.
  for (int k = 0; k < 5; ++k) CHECK(abs(r.coeffs[k] - Real::parse(reference[k], 128)).to_double() < 2e-15);
}

TEST_CASE("quadrature: non-finite g names theta") {
  QuadratureOptions opts;
  opts.initial_points = 64;
  opts.max_points = 64;
  const auto bad = [](const Real& t) { return t > Real(1) ? Real(1) / Real(0) : Real(1); };
  try {
    fourier_coefficients_by_quadrature(bad, 2, 128, opts);
    FAIL("expected failure");
  } catch (const NumericError& e) {
    CHECK(std::string(e.what()).find("theta") != std::string::npos);
  }
}
