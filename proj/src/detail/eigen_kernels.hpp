#pragma once

// Precision-generic dense eigenvalue kernels, instantiated for double and
// Real. Kernels operating on Real expect an enclosing PrecisionScope so that
// scalar temporaries are created at the working precision.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "matrixless/dense_matrix.hpp"
#include "matrixless/errors.hpp"
#include "matrixless/real.hpp"

namespace matrixless::detail {

using std::abs;
using std::copysign;
using std::sqrt;

template <typename T>
bool is_zero(const T& x) {
  return x == T(0);
}

/// Radix-2 row/column equilibration. Returns the scale factors.
template <typename T>
void balance_inplace(Matrix<T>& a) {
  const std::size_t n = a.rows();
  const T radix(2);
  const T radix_sq(4);
  bool done = false;
  T r(0), c(0), g(0), f(0), s(0);
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      r = T(0);
      c = T(0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += abs(a(j, i));
        r += abs(a(i, j));
      }
      if (is_zero(c) || is_zero(r)) continue;
      g = r / radix;
      f = T(1);
      s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix_sq;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix_sq;
      }
      if ((c + r) / f < T(0.95) * s) {
        done = false;
        g = T(1) / f;
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= g;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

/// Householder reduction to upper Hessenberg form. Columns that are already
/// zero below the subdiagonal are skipped.
template <typename T>
void hessenberg_inplace(Matrix<T>& a) {
  const std::size_t n = a.rows();
  if (n < 3) return;
  std::vector<T> u(n, T(0));
  T scale(0), sigma(0), alpha(0), tau(0), dot(0);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    bool already = true;
    for (std::size_t i = k + 2; i < n; ++i) {
      if (!is_zero(a(i, k))) {
        already = false;
        break;
      }
    }
    if (already) continue;

    scale = T(0);
    for (std::size_t i = k + 1; i < n; ++i) scale += abs(a(i, k));
    sigma = T(0);
    for (std::size_t i = k + 1; i < n; ++i) {
      u[i] = a(i, k) / scale;
      addmul(sigma, u[i], u[i]);
    }
    alpha = sqrt(sigma);
    if (u[k + 1] > T(0)) alpha = -alpha;
    // H = I - tau u u^T with u = x - alpha e1
    tau = T(1) / (sigma - alpha * u[k + 1]);
    u[k + 1] -= alpha;

    for (std::size_t j = k; j < n; ++j) {
      dot = T(0);
      for (std::size_t i = k + 1; i < n; ++i) addmul(dot, u[i], a(i, j));
      dot *= tau;
      for (std::size_t i = k + 1; i < n; ++i) submul(a(i, j), dot, u[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      dot = T(0);
      T* row = a.row(i);
      for (std::size_t j = k + 1; j < n; ++j) addmul(dot, row[j], u[j]);
      dot *= tau;
      for (std::size_t j = k + 1; j < n; ++j) submul(row[j], dot, u[j]);
    }
    a(k + 1, k) = alpha * scale;
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = T(0);
  }
}

/// Francis double-shift QR on an upper Hessenberg matrix, eigenvalues only.
/// Work is confined to the active unreduced window. `wr`/`wi` receive the
/// real and imaginary parts.
template <typename T>
void hessenberg_qr(Matrix<T>& a, const T& eps, std::vector<T>& wr, std::vector<T>& wi, int bits) {
  const long n = static_cast<long>(a.rows());
  wr.assign(static_cast<std::size_t>(n), T(0));
  wi.assign(static_cast<std::size_t>(n), T(0));
  if (n == 0) return;

  T anorm(0);
  for (long i = 0; i < n; ++i)
    for (long j = std::max(i - 1, 0L); j < n; ++j) anorm += abs(a(i, j));

  T z(0), y(0), x(0), w(0), v(0), u(0), t(0), s(0), r(0), q(0), p(0);
  const long budget = 40 * n;
  long total = 0;
  long nn = n - 1;
  while (nn >= 0) {
    long its = 0;
    long l = 0;
    do {
      for (l = nn; l > 0; --l) {
        s = abs(a(l - 1, l - 1)) + abs(a(l, l));
        if (is_zero(s)) s = anorm;
        if (abs(a(l, l - 1)) <= eps * s) {
          a(l, l - 1) = T(0);
          break;
        }
      }
      x = a(nn, nn);
      if (l == nn) {
        wr[nn] = x + t;
        wi[nn] = T(0);
        --nn;
      } else {
        y = a(nn - 1, nn - 1);
        w = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          p = T(0.5) * (y - x);
          q = p * p + w;
          z = sqrt(abs(q));
          x += t;
          if (q >= T(0)) {
            z = p + copysign(z, p);
            wr[nn - 1] = wr[nn] = x + z;
            if (!is_zero(z)) wr[nn] = x - w / z;
            wi[nn - 1] = wi[nn] = T(0);
          } else {
            wr[nn - 1] = wr[nn] = x + p;
            wi[nn - 1] = z;
            wi[nn] = -z;
          }
          nn -= 2;
        } else {
          if (total >= budget)
            throw ConvergenceError("QR iteration did not converge for matrix of order " + std::to_string(n) +
                                       " at " + std::to_string(bits) +
                                       " bits; raise the precision or the iteration cap",
                                   static_cast<std::size_t>(n), bits);
          if (its > 0 && its % 10 == 0) {
            t += x;
            for (long i = 0; i <= nn; ++i) a(i, i) -= x;
            s = abs(a(nn, nn - 1)) + abs(a(nn - 1, nn - 2));
            x = T(0.75) * s;
            y = x;
            w = T(-0.4375) * s * s;
          }
          ++its;
          ++total;
          long m = nn - 2;
          for (; m >= l; --m) {
            z = a(m, m);
            r = x - z;
            s = y - z;
            p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - r - s;
            r = a(m + 2, m + 1);
            s = abs(p) + abs(q) + abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            u = abs(a(m, m - 1)) * (abs(q) + abs(r));
            v = abs(p) * (abs(a(m - 1, m - 1)) + abs(z) + abs(a(m + 1, m + 1)));
            if (u <= eps * v) break;
          }
          for (long i = m; i < nn - 1; ++i) {
            a(i + 2, i) = T(0);
            if (i != m) a(i + 2, i - 1) = T(0);
          }
          for (long k = m; k < nn; ++k) {
            if (k != m) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = T(0);
              if (k + 1 != nn) r = a(k + 2, k - 1);
              x = abs(p) + abs(q) + abs(r);
              if (!is_zero(x)) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            s = sqrt(p * p + q * q + r * r);
            s = copysign(s, p);
            if (is_zero(s)) continue;
            if (k == m) {
              if (l != m) a(k, k - 1) = -a(k, k - 1);
            } else {
              a(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            y = q / s;
            z = r / s;
            q /= p;
            r /= p;
            const bool three = (k + 1 != nn);
            T* rk = a.row(k);
            T* rk1 = a.row(k + 1);
            T* rk2 = three ? a.row(k + 2) : nullptr;
            for (long j = k; j <= nn; ++j) {
              p = rk[j];
              addmul(p, q, rk1[j]);
              if (three) {
                addmul(p, r, rk2[j]);
                submul(rk2[j], p, z);
              }
              submul(rk1[j], p, y);
              submul(rk[j], p, x);
            }
            const long mmin = nn < k + 3 ? nn : k + 3;
            for (long i = l; i <= mmin; ++i) {
              T* ri = a.row(i);
              mul_into(p, x, ri[k]);
              addmul(p, y, ri[k + 1]);
              if (three) {
                addmul(p, z, ri[k + 2]);
                submul(ri[k + 2], p, r);
              }
              submul(ri[k + 1], p, q);
              ri[k] -= p;
            }
          }
        }
      }
    } while (l < nn - 1);
  }
}

template <typename T>
bool is_symmetric(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

/// Largest |i - j| over nonzero entries.
template <typename T>
std::size_t half_bandwidth(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  std::size_t b = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(a(i, j))) b = std::max(b, i > j ? i - j : j - i);
  return b;
}

/// Applies the rotation [c s; -s c] to rows and columns (p, p+1) of a
/// symmetric matrix, touching only the index window [lo, hi].
template <typename T>
void rotate_symmetric(Matrix<T>& a, std::size_t p, const T& c, const T& s, std::size_t lo, std::size_t hi, T& x,
                      T& y) {
  const std::size_t q = p + 1;
  T* rp = a.row(p);
  T* rq = a.row(q);
  for (std::size_t k = lo; k <= hi; ++k) {
    x = rp[k];
    y = rq[k];
    mul_into(rp[k], c, x);
    addmul(rp[k], s, y);
    mul_into(rq[k], c, y);
    submul(rq[k], s, x);
  }
  for (std::size_t k = lo; k <= hi; ++k) {
    T* rk = a.row(k);
    x = rk[p];
    y = rk[q];
    mul_into(rk[p], c, x);
    addmul(rk[p], s, y);
    mul_into(rk[q], c, y);
    submul(rk[q], s, x);
  }
}

/// Reduces a symmetric matrix of half-bandwidth `b` to tridiagonal form by
/// Givens rotations with bulge chasing. Cost O(n^2 b).
template <typename T>
void band_to_tridiagonal(Matrix<T>& a, std::size_t b, std::vector<T>& diag, std::vector<T>& off) {
  const std::size_t n = a.rows();
  T c(0), s(0), r(0), x(0), y(0);
  auto zero_entry = [&](std::size_t row, std::size_t col) {
    // Zero a(row, col) against a(row - 1, col) with a rotation in plane (row-1, row).
    const T& piv = a(row - 1, col);
    const T& tgt = a(row, col);
    r = sqrt(piv * piv + tgt * tgt);
    c = piv / r;
    s = tgt / r;
    const std::size_t p = row - 1;
    const std::size_t lo = p > b + 1 ? p - b - 1 : 0;
    const std::size_t hi = std::min(n - 1, row + b + 1);
    rotate_symmetric(a, p, c, s, lo, hi, x, y);
    a(row, col) = T(0);
    a(col, row) = T(0);
  };
  if (b > 1) {
    for (std::size_t j = 0; j + 2 < n; ++j) {
      for (std::size_t i = std::min(j + b, n - 1); i >= j + 2; --i) {
        if (is_zero(a(i, j))) continue;
        zero_entry(i, j);
        std::size_t col = i - 1;
        std::size_t row = i + b;
        while (row < n && !is_zero(a(row, col))) {
          zero_entry(row, col);
          col = row - 1;
          row += b;
        }
      }
    }
  }
  diag.assign(n, T(0));
  off.assign(n, T(0));
  for (std::size_t i = 0; i < n; ++i) {
    diag[i] = a(i, i);
    if (i + 1 < n) off[i] = a(i + 1, i);
  }
}

/// Implicit QL with Wilkinson-type shifts on a symmetric tridiagonal matrix.
/// `off[i]` couples entries i and i+1. Eigenvalues are left in `diag`.
template <typename T>
void tridiagonal_ql(std::vector<T>& d, std::vector<T>& e, const T& eps, int bits) {
  const long n = static_cast<long>(d.size());
  if (n == 0) return;
  e.resize(static_cast<std::size_t>(n));
  e[n - 1] = T(0);
  T dd(0), g(0), r(0), s(0), c(0), p(0), f(0), b(0);
  const long budget = 40 * n;
  long total = 0;
  for (long l = 0; l < n; ++l) {
    long m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        dd = abs(d[m]) + abs(d[m + 1]);
        if (abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (total++ >= budget)
          throw ConvergenceError("tridiagonal QL did not converge for matrix of order " + std::to_string(n) +
                                     " at " + std::to_string(bits) + " bits",
                                 static_cast<std::size_t>(n), bits);
        g = (d[l + 1] - d[l]) / (T(2) * e[l]);
        r = sqrt(g * g + T(1));
        g = d[m] - d[l] + e[l] / (g + copysign(r, g));
        s = T(1);
        c = T(1);
        p = T(0);
        long i = m - 1;
        bool underflow = false;
        for (; i >= l; --i) {
          f = s * e[i];
          b = c * e[i];
          r = sqrt(f * f + g * g);
          e[i + 1] = r;
          if (is_zero(r)) {
            d[i + 1] -= p;
            e[m] = T(0);
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + T(2) * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = T(0);
      }
    } while (m != l);
  }
}

/// Dispatches to the symmetric or general path; fills real/imag parts.
template <typename T>
void dense_eigenvalues(Matrix<T> a, const T& eps, std::vector<T>& wr, std::vector<T>& wi, int bits) {
  const std::size_t n = a.rows();
  if (is_symmetric(a)) {
    std::vector<T> off;
    band_to_tridiagonal(a, half_bandwidth(a), wr, off);
    tridiagonal_ql(wr, off, eps, bits);
    wi.assign(n, T(0));
    return;
  }
  balance_inplace(a);
  hessenberg_inplace(a);
  hessenberg_qr(a, eps, wr, wi, bits);
}

}  // namespace matrixless::detail
