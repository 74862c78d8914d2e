#include "matrixless/expansion.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "matrixless/errors.hpp"
#include "matrixless/solve.hpp"
#include "matrixless/toeplitz.hpp"

namespace matrixless {

std::vector<Real> ExpansionTable::row(int k) const {
  const auto r = static_cast<std::size_t>(k);
  return std::vector<Real>(c.row(r), c.row(r) + c.cols());
}

std::vector<Real> ExpansionTable::thetas() const { return sampled_grid(n0, bits).points; }

std::vector<std::size_t> nested_sizes(std::size_t n0, int alpha) {
  if (n0 < 1) throw InputError("n0 must be at least 1");
  if (alpha < 0) throw InputError("alpha must be non-negative");
  constexpr std::size_t limit = static_cast<std::size_t>(std::numeric_limits<std::int64_t>::max());
  std::vector<std::size_t> sizes;
  for (int k = 0; k <= alpha; ++k) {
    if (k >= 62 || (n0 + 1) > (limit >> k)) throw InputError("nested size 2^" + std::to_string(k) + " (n0 + 1) - 1 overflows");
    sizes.push_back((std::size_t{1} << k) * (n0 + 1) - 1);
  }
  return sizes;
}

namespace {

SpectrumSample level_spectrum(const Symbol& s, std::size_t n, const PrecisionContext& ctx, Order order) {
  const Symbol sb = s.bits() == ctx.bits() ? s : s.with_bits(ctx.bits());
  return project_real_sorted(eigenvalues(build_toeplitz(sb, n), ctx), ctx, order);
}

}  // namespace

DenseMatrix sample_eigenvalues(const Symbol& s, std::size_t n0, int alpha, const PrecisionContext& ctx, Order order,
                               const ExtractOptions& opts) {
  const std::vector<std::size_t> sizes = nested_sizes(n0, alpha);
  const int levels = alpha + 1;
  std::vector<SpectrumSample> spectra(static_cast<std::size_t>(levels));
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(levels));
  std::mutex progress_mutex;

  // Largest levels first; they dominate the cost.
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < levels; i = next++) {
      const int k = levels - 1 - i;
      const auto start = std::chrono::steady_clock::now();
      try {
        spectra[static_cast<std::size_t>(k)] = level_spectrum(s, sizes[static_cast<std::size_t>(k)], ctx, order);
      } catch (...) {
        failures[static_cast<std::size_t>(k)] = std::current_exception();
      }
      if (opts.progress) {
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        std::lock_guard<std::mutex> lock(progress_mutex);
        opts.progress(LevelProgress{k, levels, sizes[static_cast<std::size_t>(k)], dt.count()});
      }
    }
  };
  const unsigned threads = std::max(1u, std::min(opts.threads, static_cast<unsigned>(levels)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  for (const std::exception_ptr& f : failures)
    if (f) std::rethrow_exception(f);

  DenseMatrix e(static_cast<std::size_t>(levels), n0, Real::zero(ctx.bits()));
  for (int k = 0; k < levels; ++k) {
    const std::size_t stride = std::size_t{1} << k;
    const auto& values = spectra[static_cast<std::size_t>(k)].values;
    for (std::size_t j = 1; j <= n0; ++j) e(static_cast<std::size_t>(k), j - 1) = values[stride * j - 1];
  }
  return e;
}

ExpansionTable vandermonde_solve(const std::vector<Real>& hs, const DenseMatrix& e, const PrecisionContext& ctx,
                                 Order order) {
  if (hs.empty()) throw InputError("need at least one step size");
  if (e.rows() != hs.size()) throw InputError("E must have one row per step size");
  const int bits = ctx.bits();
  PrecisionScope scope(bits);
  const std::size_t m = hs.size();
  DenseMatrix v(m, m, Real::zero(bits));
  for (std::size_t i = 0; i < m; ++i) {
    if (!(hs[i] > 0)) throw InputError("step sizes must be positive");
    Real p = Real(1);
    for (std::size_t j = 0; j < m; ++j) {
      v(i, j) = p;
      p *= hs[i];
    }
  }
  ExpansionTable t;
  t.n0 = e.cols();
  t.alpha = static_cast<int>(m) - 1;
  t.order = order;
  t.bits = bits;
  for (const Real& h : hs) {
    const double n = 1.0 / h.to_double() - 1.0;
    t.sizes.push_back(n > 0 ? static_cast<std::size_t>(n + 0.5) : 0);
  }
  t.c = solve_dense(v, e, ctx);
  return t;
}

bool row0_monotone(const ExpansionTable& t) {
  for (std::size_t j = 1; j < t.n0; ++j) {
    const Real& a = t.c(0, j - 1);
    const Real& b = t.c(0, j);
    if (t.order == Order::ascending ? b < a : a < b) return false;
  }
  return true;
}

ExpansionTable extract(const Symbol& s, std::size_t n0, int alpha, const PrecisionContext& ctx, Order order,
                       const ExtractOptions& opts) {
  const std::vector<std::size_t> sizes = nested_sizes(n0, alpha);
  const DenseMatrix e = sample_eigenvalues(s, n0, alpha, ctx, order, opts);
  std::vector<Real> hs;
  {
    PrecisionScope scope(ctx.bits());
    for (std::size_t n : sizes) hs.push_back(Real(1) / Real(n + 1));
  }
  ExpansionTable t = vandermonde_solve(hs, e, ctx, order);
  t.sizes = sizes;
  if (!row0_monotone(t))
    t.warnings.push_back("row 0 is not monotone; the distribution function may be non-monotone or the precision too low");
  return t;
}

}  // namespace matrixless
