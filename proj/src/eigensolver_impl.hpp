#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "resonax/eigensolver.hpp"
#include "resonax/errors.hpp"

namespace resonax {

namespace eig_detail {

template <class R>
void balance_matrix(Matrix<std::complex<R>>& a) {
  const std::size_t n = a.rows();
  bool changed = true;
  for (int sweep = 0; changed && sweep < 100; ++sweep) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      double c = 0.0;
      double r = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += to_double(cabs1(a(j, i)));
        r += to_double(cabs1(a(i, j)));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / 2.0;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= 2.0;
        c *= 4.0;
      }
      g = r * 2.0;
      while (c >= g) {
        f /= 2.0;
        c /= 4.0;
      }
      if ((c + r) / f < 0.95 * s) {
        changed = true;
        const R row_scale = real_from<R>(1.0 / f);
        const R col_scale = real_from<R>(f);
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= row_scale;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= col_scale;
      }
    }
  }
}

template <class R>
void reduce_to_hessenberg(Matrix<std::complex<R>>& a) {
  using C = std::complex<R>;
  using std::abs;
  using std::sqrt;
  const std::size_t n = a.rows();
  std::vector<C> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    R scale = 0;
    for (std::size_t i = k + 1; i < n; ++i) scale += cabs1(a(i, k));
    if (scale == R(0)) continue;

    R sigma = 0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i] = a(i, k) / scale;
      sigma += std::norm(v[i]);
    }
    const R alpha = sqrt(sigma);
    const R x0 = abs(v[k + 1]);
    const C phase = x0 == R(0) ? C(R(1)) : v[k + 1] / x0;
    v[k + 1] += phase * alpha;
    // v^H v = 2 alpha (alpha + |x0|)
    const R beta = R(1) / (alpha * (alpha + x0));

    for (std::size_t j = k; j < n; ++j) {
      C dot{};
      for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * a(i, j);
      dot *= beta;
      for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= v[i] * dot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      C dot{};
      for (std::size_t j = k + 1; j < n; ++j) dot += a(i, j) * v[j];
      dot *= beta;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= dot * std::conj(v[j]);
    }
    a(k + 1, k) = -phase * alpha * scale;
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0;
  }
}

// Unitary rotation G with G [x; y] = [r; 0], G = [[c, s], [-conj(s), c]].
template <class R>
void make_givens(const std::complex<R>& x, const std::complex<R>& y, R& c, std::complex<R>& s,
                 std::complex<R>& r) {
  using std::abs;
  using std::sqrt;
  using C = std::complex<R>;
  const R ax = abs(x);
  const R ay = abs(y);
  if (ay == R(0)) {
    c = 1;
    s = 0;
    r = x;
    return;
  }
  if (ax == R(0)) {
    c = 0;
    s = std::conj(y) / ay;
    r = C(ay);
    return;
  }
  const R big = ax > ay ? ax : ay;
  const R qx = ax / big;
  const R qy = ay / big;
  const R nrm = big * sqrt(qx * qx + qy * qy);
  const C phase = x / ax;
  c = ax / nrm;
  s = phase * std::conj(y) / nrm;
  r = phase * nrm;
}

template <class R>
void two_by_two(const std::complex<R>& a, const std::complex<R>& b, const std::complex<R>& c,
                const std::complex<R>& d, std::complex<R>& l1, std::complex<R>& l2) {
  using C = std::complex<R>;
  const C mean = (a + d) / R(2);
  const C half = (a - d) / R(2);
  const C disc = std::sqrt(half * half + b * c);
  const C plus = mean + disc;
  const C minus = mean - disc;
  const C big = std::norm(plus) >= std::norm(minus) ? plus : minus;
  l1 = big;
  const C det = a * d - b * c;
  l2 = std::norm(big) == R(0) ? C(0) : det / big;
}

template <class R>
bool negligible_subdiagonal(const Matrix<std::complex<R>>& h, std::size_t k, const R& eps,
                            const R& small) {
  const R sub = cabs1(h(k, k - 1));
  if (sub <= small) return true;
  R tst = cabs1(h(k - 1, k - 1)) + cabs1(h(k, k));
  if (tst == R(0)) {
    if (k >= 2) tst += cabs1(h(k - 1, k - 2));
    if (k + 1 < h.rows()) tst += cabs1(h(k + 1, k));
  }
  if (sub > eps * tst) return false;
  // Ahues-Tisseur refinement of the deflation test.
  const R up = cabs1(h(k - 1, k));
  const R ab = std::max(sub, up);
  const R ba = std::min(sub, up);
  const R diff = cabs1(h(k - 1, k - 1) - h(k, k));
  const R hkk = cabs1(h(k, k));
  const R aa = std::max(hkk, diff);
  const R bb = std::min(hkk, diff);
  const R s = aa + ab;
  return ba * (ab / s) <= std::max(small, eps * (bb * (aa / s)));
}

template <class R>
std::vector<std::complex<R>> hessenberg_qr(Matrix<std::complex<R>>& h) {
  using C = std::complex<R>;
  using std::abs;
  const std::size_t n = h.rows();
  std::vector<C> w(n);
  if (n == 0) return w;
  const R eps = RealTraits<R>::epsilon();
  const R small = eps * real_from<R>(1e-280);
  const int max_its = 30 * static_cast<int>(std::max<std::size_t>(10, n));

  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
  while (hi >= 0) {
    int its = 0;
    for (;;) {
      std::size_t l = static_cast<std::size_t>(hi);
      while (l > 0 && !negligible_subdiagonal(h, l, eps, small)) --l;
      if (l > 0) h(l, l - 1) = 0;
      const auto ihi = static_cast<std::size_t>(hi);
      if (l == ihi) {
        w[ihi] = h(ihi, ihi);
        hi -= 1;
        break;
      }
      if (l + 1 == ihi) {
        two_by_two(h(l, l), h(l, ihi), h(ihi, l), h(ihi, ihi), w[l], w[ihi]);
        hi -= 2;
        break;
      }
      if (++its > max_its) {
        throw ConvergenceError("QR iteration failed to converge for eigenvalue " + std::to_string(hi),
                               static_cast<int>(hi));
      }

      C shift;
      if (its % 20 == 10) {
        shift = h(l, l) + C(R(0.75) * abs(h(l + 1, l).real()));
      } else if (its % 20 == 0) {
        shift = h(ihi, ihi) + C(R(0.75) * abs(h(ihi, ihi - 1).real()));
      } else {
        C l1, l2;
        two_by_two(h(ihi - 1, ihi - 1), h(ihi - 1, ihi), h(ihi, ihi - 1), h(ihi, ihi), l1, l2);
        shift = std::norm(l1 - h(ihi, ihi)) < std::norm(l2 - h(ihi, ihi)) ? l1 : l2;
      }

      C x = h(l, l) - shift;
      C y = h(l + 1, l);
      for (std::size_t k = l; k < ihi; ++k) {
        if (k > l) {
          x = h(k, k - 1);
          y = h(k + 1, k - 1);
        }
        R c;
        C s, r;
        make_givens(x, y, c, s, r);
        if (k > l) {
          h(k, k - 1) = r;
          h(k + 1, k - 1) = 0;
        }
        const C sc = std::conj(s);
        for (std::size_t j = k; j <= ihi; ++j) {
          const C a0 = h(k, j);
          const C a1 = h(k + 1, j);
          h(k, j) = c * a0 + s * a1;
          h(k + 1, j) = c * a1 - sc * a0;
        }
        const std::size_t last = std::min(k + 2, ihi);
        for (std::size_t i = l; i <= last; ++i) {
          const C a0 = h(i, k);
          const C a1 = h(i, k + 1);
          h(i, k) = c * a0 + sc * a1;
          h(i, k + 1) = c * a1 - s * a0;
        }
      }
    }
  }
  return w;
}

}  // namespace eig_detail

template <class R>
std::vector<std::complex<R>> general_eigenvalues(Matrix<std::complex<R>> a, bool balance) {
  if (a.rows() != a.cols()) throw Error("eigenvalues: matrix must be square");
  for (const auto& z : a.storage()) {
    using std::isfinite;
    if (!isfinite(z.real()) || !isfinite(z.imag())) throw Error("eigenvalues: non-finite matrix entry");
  }
  if (balance) eig_detail::balance_matrix(a);
  eig_detail::reduce_to_hessenberg(a);
  return eig_detail::hessenberg_qr(a);
}

template <class R>
std::vector<std::complex<R>> symmetric_tridiagonal_eigenvalues(std::vector<std::complex<R>> d,
                                                               std::vector<std::complex<R>> e) {
  using C = std::complex<R>;
  const std::size_t n = d.size();
  e.resize(n, C(0));
  if (n == 0) return d;
  e[n - 1] = 0;
  const R eps = RealTraits<R>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const R dd = cabs1(d[m]) + cabs1(d[m + 1]);
        if (cabs1(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) {
          throw ConvergenceError("tridiagonal QL failed to converge for eigenvalue " + std::to_string(l),
                                 static_cast<int>(l));
        }
        C g = (d[l + 1] - d[l]) / (R(2) * e[l]);
        C r = std::sqrt(g * g + C(R(1)));
        if ((std::conj(g) * r).real() < R(0)) r = -r;
        g = d[m] - d[l] + e[l] / (g + r);
        C s = R(1);
        C c = R(1);
        C p = R(0);
        bool breakdown = false;
        std::ptrdiff_t i = static_cast<std::ptrdiff_t>(m) - 1;
        for (; i >= static_cast<std::ptrdiff_t>(l); --i) {
          const auto iu = static_cast<std::size_t>(i);
          const C f = s * e[iu];
          const C b = c * e[iu];
          r = std::sqrt(f * f + g * g);
          e[iu + 1] = r;
          if (cabs1(r) == R(0)) {
            d[iu + 1] -= p;
            e[m] = 0;
            breakdown = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[iu + 1] - p;
          r = (d[iu] - g) * s + R(2) * c * b;
          p = s * r;
          d[iu + 1] = g + p;
          g = c * r - b;
        }
        if (breakdown) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0;
      }
    } while (m != l);
  }
  return d;
}

}  // namespace resonax
