#pragma once

#include <cmath>

#include "resonax/errors.hpp"
#include "resonax/matelem.hpp"
#include "resonax/numeric.hpp"
#include "resonax/quadrature.hpp"

namespace resonax {

namespace me_detail {

template <class R>
using Cx = std::complex<R>;

template <class R>
std::vector<Cx<R>> coefficients(const PotentialSpec& potential) {
  std::vector<Cx<R>> c(static_cast<std::size_t>(potential.max_power()) + 1, Cx<R>(R(0)));
  (void)potential.polynomial();  // throws for non-polynomial terms
  for (const auto& t : potential.terms)
    if (t.kind == TermKind::monomial)
      c[static_cast<std::size_t>(t.power)] += Cx<R>(narrow<R>(t.real_coefficient()), real_from<R>(t.coefficient.imag()));
  return c;
}

template <class R>
Cx<R> ipow(const Cx<R>& z, int n) {
  Cx<R> out(R(1));
  Cx<R> base = z;
  bool inv = n < 0;
  unsigned e = static_cast<unsigned>(inv ? -n : n);
  while (e) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return inv ? Cx<R>(R(1)) / out : out;
}

// P <- P * X for tridiagonal X given by (sub, diag, super) arrays.
template <class T>
Matrix<T> times_tridiagonal(const Matrix<T>& p, const std::vector<T>& lower, const std::vector<T>& diag,
                            const std::vector<T>& upper) {
  const std::size_t n = p.rows();
  Matrix<T> q(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      T s = p(i, j) * diag[j];
      if (j > 0) s += p(i, j - 1) * upper[j - 1];  // X(j-1, j)
      if (j + 1 < n) s += p(i, j + 1) * lower[j];  // X(j+1, j)
      q(i, j) = s;
    }
  }
  return q;
}

template <class T>
void symmetrize(Matrix<T>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) a(j, i) = a(i, j);
}

inline double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

template <class R>
std::vector<std::size_t> sector_indices(const BasisSpec& basis, std::size_t M) {
  std::vector<std::size_t> idx(M);
  for (std::size_t n = 0; n < M; ++n) idx[n] = basis.function_index(n);
  return idx;
}

// Radial r^2 band in units of 1/Omega: diag 2j+Lambda+3/2, off -sqrt(j(j+Lambda+1/2)).
template <class R>
void radial_band(std::size_t n, const R& Lambda, std::vector<R>& diag, std::vector<R>& off) {
  diag.assign(n, R(0));
  off.assign(n, R(0));
  using std::sqrt;
  for (std::size_t j = 0; j < n; ++j) {
    const R dj = real_from<R>(double(j));
    diag[j] = R(2) * dj + Lambda + real_from<R>(1.5);
    const R jj = dj + R(1);
    off[j] = -sqrt(jj * (jj + Lambda + real_from<R>(0.5)));  // couples j and j+1
  }
}

template <class R>
Matrix<Cx<R>> oscillator_matrix(const BasisSpec& basis, const PotentialSpec& potential, const ParamPoint<R>& params,
                                std::size_t M, std::size_t extra) {
  using C = Cx<R>;
  const auto coeff = coefficients<R>(potential);
  const int p = potential.max_power();
  const C omega = *params.omega;
  const auto idx = sector_indices<R>(basis, M);
  const std::size_t kmax = idx.back();

  if (basis.kind() == BasisKind::radial_ho) {
    const std::size_t n = kmax + 1 + static_cast<std::size_t>(p / 2) + extra;
    const R Lambda = real_from<R>(basis.Lambda());
    std::vector<R> d, off;
    radial_band(n, Lambda, d, off);
    const C inv = C(R(1)) / omega;
    std::vector<C> diag(n), lower(n), upper(n);
    for (std::size_t j = 0; j < n; ++j) {
      diag[j] = C(d[j]) * inv;
      lower[j] = upper[j] = C(off[j]) * inv;
    }
    Matrix<C> h(n, n);
    Matrix<C> power = Matrix<C>::identity(n);
    for (int k = 1; 2 * k <= p; ++k) {
      power = times_tridiagonal(power, lower, diag, upper);
      const C c = coeff[static_cast<std::size_t>(2 * k)];
      if (c == C(R(0))) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) += c * power(i, j);
    }
    // kinetic + centrifugal = Omega(2j+Lambda+3/2) - Omega^2 r^2 / 2
    const C half_omega = omega / R(2);
    for (std::size_t j = 0; j < n; ++j) {
      h(j, j) += half_omega * C(d[j]);
      if (j + 1 < n) {
        h(j, j + 1) -= half_omega * C(off[j]);
        h(j + 1, j) -= half_omega * C(off[j]);
      }
    }
    Matrix<C> out = h.block(M, M);
    symmetrize(out);
    return out;
  }

  const std::size_t n = kmax + 1 + static_cast<std::size_t>(p) + extra;
  const C shift = params.t ? *params.t : C(R(0));
  using std::sqrt;
  const C scale = C(R(1)) / sqrt(C(R(2)) * omega);
  std::vector<C> diag(n, shift), lower(n), upper(n);
  for (std::size_t k = 0; k < n; ++k) lower[k] = upper[k] = scale * C(sqrt(real_from<R>(double(k + 1))));
  Matrix<C> full(n, n);
  Matrix<C> power = Matrix<C>::identity(n);
  if (coeff[0] != C(R(0)))
    for (std::size_t k = 0; k < n; ++k) full(k, k) += coeff[0];
  for (int q = 1; q <= p; ++q) {
    power = times_tridiagonal(power, lower, diag, upper);
    const C c = coeff[static_cast<std::size_t>(q)];
    if (c == C(R(0))) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) full(i, j) += c * power(i, j);
  }
  // kinetic: p^2/2 = Omega/4 (2k+1) on the diagonal, -Omega/4 sqrt((k+1)(k+2)) two off
  const C quarter = omega / R(4);
  for (std::size_t k = 0; k < n; ++k) {
    full(k, k) += quarter * C(real_from<R>(2.0 * k + 1.0));
    if (k + 2 < n) {
      const C v = -quarter * C(sqrt(real_from<R>(double(k + 1)) * real_from<R>(double(k + 2))));
      full(k, k + 2) += v;
      full(k + 2, k) += v;
    }
  }
  Matrix<C> out = full.select(idx);
  symmetrize(out);
  return out;
}

template <class R>
LaurentTrace<R> oscillator_trace(const BasisSpec& basis, const PotentialSpec& potential, std::size_t M) {
  using C = Cx<R>;
  using std::sqrt;
  const auto coeff = coefficients<R>(potential);
  const int p = potential.max_power();
  const auto idx = sector_indices<R>(basis, M);
  const std::size_t kmax = idx.back();
  LaurentTrace<R> tr;
  tr.shifted = basis.kind() == BasisKind::shifted_ho;

  if (basis.kind() == BasisKind::radial_ho) {
    const std::size_t n = kmax + 1 + static_cast<std::size_t>(p / 2);
    std::vector<R> d, off;
    radial_band(n, real_from<R>(basis.Lambda()), d, off);
    for (std::size_t j = 0; j < M; ++j) tr.A += C(d[j] / R(2));
    tr.c.assign(static_cast<std::size_t>(p / 2) + 1, std::vector<C>(1, C(R(0))));
    tr.c[0][0] = coeff[0] * C(real_from<R>(double(M)));
    Matrix<R> power = Matrix<R>::identity(n);
    for (int k = 1; 2 * k <= p; ++k) {
      power = times_tridiagonal(power, off, d, off);
      R s = 0;
      for (std::size_t j = 0; j < M; ++j) s += power(j, j);
      tr.c[static_cast<std::size_t>(k)][0] += coeff[static_cast<std::size_t>(2 * k)] * C(s);
    }
    return tr;
  }

  const std::size_t n = kmax + 1 + static_cast<std::size_t>(p);
  for (auto k : idx) tr.A += C(real_from<R>(2.0 * k + 1.0) / R(4));
  // diagonal sums of (a + a^dagger)^q over the sector
  std::vector<R> zero(n, R(0)), band(n);
  for (std::size_t k = 0; k < n; ++k) band[k] = sqrt(real_from<R>(double(k + 1)));
  std::vector<R> dsum(static_cast<std::size_t>(p) + 1, R(0));
  dsum[0] = real_from<R>(double(M));
  Matrix<R> power = Matrix<R>::identity(n);
  for (int q = 1; q <= p; ++q) {
    power = times_tridiagonal(power, band, zero, band);
    R s = 0;
    for (auto k : idx) s += power(k, k);
    dsum[static_cast<std::size_t>(q)] = s;
  }
  tr.c.assign(static_cast<std::size_t>(p / 2) + 1, std::vector<C>(static_cast<std::size_t>(p) + 1, C(R(0))));
  for (int pw = 0; pw <= p; ++pw) {
    const C cp = coeff[static_cast<std::size_t>(pw)];
    if (cp == C(R(0))) continue;
    for (int q = 0; q <= pw; q += 2) {
      const int tq = pw - q;
      if (!tr.shifted && tq != 0) continue;
      const int m = q / 2;
      const R f = real_from<R>(binomial(pw, q)) * dsum[static_cast<std::size_t>(q)] / real_from<R>(std::ldexp(1.0, m));
      tr.c[static_cast<std::size_t>(m)][static_cast<std::size_t>(tq)] += cp * C(f);
    }
  }
  return tr;
}

template <class R>
TraceEval<R> eval_laurent(const LaurentTrace<R>& tr, const std::vector<Cx<R>>& x, int order) {
  using C = Cx<R>;
  const C omega = x.at(0);
  const C t = tr.shifted ? x.at(1) : C(R(0));
  const std::size_t np = tr.shifted ? 2 : 1;
  const std::size_t mmax = tr.c.size();
  std::size_t qmax = 0;
  for (const auto& row : tr.c) qmax = std::max(qmax, row.size());
  // inverse powers of Omega up to mmax+2, powers of t up to qmax
  std::vector<C> winv(mmax + 3), tp(qmax + 1);
  winv[0] = C(R(1));
  const C wi = C(R(1)) / omega;
  for (std::size_t m = 1; m < winv.size(); ++m) winv[m] = winv[m - 1] * wi;
  tp[0] = C(R(1));
  for (std::size_t q = 1; q <= qmax; ++q) tp[q] = tp[q - 1] * t;

  TraceEval<R> out;
  out.value = tr.A * omega;
  if (order >= 1) {
    out.gradient.assign(np, C(R(0)));
    out.gradient[0] = tr.A;
  }
  if (order >= 2) out.hessian = Matrix<C>(np, np);
  for (std::size_t m = 0; m < mmax; ++m) {
    for (std::size_t q = 0; q < tr.c[m].size(); ++q) {
      const C c = tr.c[m][q];
      if (c == C(R(0))) continue;
      const R rm = real_from<R>(double(m));
      const R rq = real_from<R>(double(q));
      out.value += c * tp[q] * winv[m];
      if (order >= 1) {
        out.gradient[0] -= rm * c * tp[q] * winv[m + 1];
        if (tr.shifted && q >= 1) out.gradient[1] += rq * c * tp[q - 1] * winv[m];
      }
      if (order >= 2) {
        out.hessian(0, 0) += rm * (rm + R(1)) * c * tp[q] * winv[m + 2];
        if (tr.shifted && q >= 1) {
          const C mixed = -rm * rq * c * tp[q - 1] * winv[m + 1];
          out.hessian(0, 1) += mixed;
          out.hessian(1, 0) += mixed;
        }
        if (tr.shifted && q >= 2) out.hessian(1, 1) += rq * (rq - R(1)) * c * tp[q - 2] * winv[m];
      }
    }
  }
  return out;
}

// integral over the reduced interval of u^p cos(n pi u), n = 0..nmax
template <class R>
std::vector<R> monomial_moments(int p, bool half, std::size_t nmax) {
  std::vector<R> out(nmax + 1);
  const R pi = RealTraits<R>::pi();
  std::vector<R> cc(static_cast<std::size_t>(p) + 1), ss(static_cast<std::size_t>(p) + 1);
  for (std::size_t n = 0; n <= nmax; ++n) {
    if (n == 0) {
      out[0] = half ? R(1) / real_from<R>(p + 1.0) : (p % 2 == 0 ? R(2) / real_from<R>(p + 1.0) : R(0));
      continue;
    }
    const R c = pi * real_from<R>(double(n));
    const R sign = n % 2 == 0 ? R(1) : R(-1);  // cos(n pi)
    cc[0] = 0;
    ss[0] = half ? (R(1) - sign) / c : R(0);
    for (int q = 1; q <= p; ++q) {
      const R rq = real_from<R>(double(q));
      cc[static_cast<std::size_t>(q)] = -(rq / c) * ss[static_cast<std::size_t>(q - 1)];
      const R boundary = half ? -sign / c : (q % 2 == 1 ? -R(2) * sign / c : R(0));
      ss[static_cast<std::size_t>(q)] = boundary + (rq / c) * cc[static_cast<std::size_t>(q - 1)];
    }
    out[n] = cc[static_cast<std::size_t>(p)];
  }
  return out;
}

// F_q(s) = int_0^1 u^q e^{-s u} du for q = 0..qmax
template <class R>
std::vector<Cx<R>> exp_moments(const Cx<R>& s, int qmax) {
  using C = Cx<R>;
  using std::abs;
  std::vector<C> f(static_cast<std::size_t>(qmax) + 1);
  const R eps = RealTraits<R>::epsilon();
  if (std::abs(s) < real_from<R>(1.5)) {
    for (int q = 0; q <= qmax; ++q) {
      C sum(R(0));
      C term(R(1));  // (-s)^k / k!
      for (int k = 0; k < 200; ++k) {
        const C add = term / real_from<R>(double(q + k + 1));
        sum += add;
        if (k > 2 && cabs1(add) <= eps * cabs1(sum) * R(0.01)) break;
        term *= -s / real_from<R>(double(k + 1));
      }
      f[static_cast<std::size_t>(q)] = sum;
    }
    return f;
  }
  const C e = std::exp(-s);
  f[0] = (C(R(1)) - e) / s;
  for (int q = 1; q <= qmax; ++q)
    f[static_cast<std::size_t>(q)] = (real_from<R>(double(q)) * f[static_cast<std::size_t>(q - 1)] - e) / s;
  return f;
}

}  // namespace me_detail

template <class R>
KernelTable<R> trig_kernels(const PotentialSpec& potential, bool half, const std::complex<R>& L, std::size_t nmax,
                            int order, std::size_t M) {
  using C = std::complex<R>;
  using namespace me_detail;
  KernelTable<R> kt;
  kt.k.assign(nmax + 1, C(R(0)));
  if (order >= 1) kt.dk.assign(nmax + 1, C(R(0)));
  if (order >= 2) kt.d2k.assign(nmax + 1, C(R(0)));
  const R pi = RealTraits<R>::pi();

  for (const auto& term : potential.terms) {
    const C coef(narrow<R>(term.real_coefficient()), real_from<R>(term.coefficient.imag()));
    switch (term.kind) {
      case TermKind::monomial: {
        const int p = term.power;
        const auto mom = monomial_moments<R>(p, half, nmax);
        const C lp = coef * ipow(L, p);
        const C lp1 = p >= 1 ? coef * real_from<R>(double(p)) * ipow(L, p - 1) : C(R(0));
        const C lp2 = p >= 2 ? coef * real_from<R>(double(p) * (p - 1)) * ipow(L, p - 2) : C(R(0));
        for (std::size_t n = 0; n <= nmax; ++n) {
          kt.k[n] += lp * mom[n];
          if (order >= 1) kt.dk[n] += lp1 * mom[n];
          if (order >= 2) kt.d2k[n] += lp2 * mom[n];
        }
        break;
      }
      case TermKind::gaussian: {
        // even integrand on [-1,1]: twice the [0,1] integral
        const R fold = half ? R(1) : R(2);
        const auto rule = gauss_legendre_on<R>(gaussian_nodes(M), R(0), R(1));
        const R beta = narrow<R>(term.exact_decay());
        const C bl2 = beta * L * L;
        std::vector<R> cosn(nmax + 1);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
          const R u = rule.nodes[i];
          const R u2 = u * u;
          const C g = coef * fold * rule.weights[i] * std::exp(-bl2 * u2);
          const C g1 = order >= 1 ? g * (R(-2) * beta * u2) * L : C(R(0));
          const C g2 = order >= 2 ? g * (R(-2) * beta * u2 + R(4) * beta * beta * u2 * u2 * L * L) : C(R(0));
          using std::cos;
          const R c1 = cos(pi * u);
          cosn[0] = R(1);
          if (nmax >= 1) cosn[1] = c1;
          for (std::size_t n = 2; n <= nmax; ++n) cosn[n] = R(2) * c1 * cosn[n - 1] - cosn[n - 2];
          for (std::size_t n = 0; n <= nmax; ++n) {
            kt.k[n] += g * cosn[n];
            if (order >= 1) kt.dk[n] += g1 * cosn[n];
            if (order >= 2) kt.d2k[n] += g2 * cosn[n];
          }
        }
        break;
      }
      case TermKind::exp_poly: {
        if (!half) throw Unsupported("exp_poly terms are only supported on the half-line");
        const int p = term.power;
        const R a = narrow<R>(term.exact_decay());
        const R rp = real_from<R>(double(p));
        const C lp = ipow(L, p);
        const C lp1 = p >= 1 ? ipow(L, p - 1) : C(R(0));
        const C lp2 = p >= 2 ? ipow(L, p - 2) : C(R(0));
        for (std::size_t n = 0; n <= nmax; ++n) {
          const C inp(R(0), pi * real_from<R>(double(n)));
          const auto fm = exp_moments<R>(a * L - inp, p + order);
          const auto fp = n == 0 ? fm : exp_moments<R>(a * L + inp, p + order);
          auto F = [&](int q) { return (fm[static_cast<std::size_t>(q)] + fp[static_cast<std::size_t>(q)]) / R(2); };
          kt.k[n] += coef * lp * F(p);
          if (order >= 1) kt.dk[n] += coef * (rp * lp1 * F(p) - a * lp * F(p + 1));
          if (order >= 2)
            kt.d2k[n] += coef * (rp * (rp - R(1)) * lp2 * F(p) - R(2) * rp * a * lp1 * F(p + 1) + a * a * lp * F(p + 2));
        }
        break;
      }
      case TermKind::centrifugal:
        if (term.coefficient != 0.0) throw Unsupported("trig bases cannot absorb a centrifugal term");
        break;
    }
  }
  return kt;
}

namespace me_detail {

// wave number (in units of pi/L) of trig function j
template <class R>
R trig_wavenumber(BasisKind kind, std::size_t j) {
  return kind == BasisKind::trig_even ? real_from<R>(j + 0.5) : real_from<R>(j + 1.0);
}

template <class R>
Matrix<Cx<R>> trig_matrix(const BasisSpec& basis, const PotentialSpec& potential, const Cx<R>& L, std::size_t M) {
  using C = Cx<R>;
  const bool half = basis.kind() == BasisKind::radial_trig;
  const auto kt = trig_kernels<R>(potential, half, L, 2 * M + 2, 0, M);
  const R pi = RealTraits<R>::pi();
  Matrix<C> h(M, M);
  const C inv_l2 = C(R(1)) / (L * L);
  for (std::size_t j = 0; j < M; ++j) {
    for (std::size_t m = j; m < M; ++m) {
      C v;
      const C near = kt.k[m - j];
      switch (basis.kind()) {
        case BasisKind::trig_even: v = (near + kt.k[j + m + 1]) / R(2); break;
        case BasisKind::trig_odd: v = (near - kt.k[j + m + 2]) / R(2); break;
        default: v = near - kt.k[j + m + 2]; break;
      }
      if (j == m) {
        const R kw = trig_wavenumber<R>(basis.kind(), j) * pi;
        v += kw * kw / R(2) * inv_l2;
      }
      h(j, m) = v;
      h(m, j) = v;
    }
  }
  return h;
}

template <class R>
TraceEval<R> trig_trace(const BasisSpec& basis, const PotentialSpec& potential, std::size_t M, const Cx<R>& L,
                        int order) {
  using C = Cx<R>;
  const bool half = basis.kind() == BasisKind::radial_trig;
  const auto kt = trig_kernels<R>(potential, half, L, 2 * M + 2, order, M);
  const R pi = RealTraits<R>::pi();
  R kin = 0;
  for (std::size_t j = 0; j < M; ++j) {
    const R kw = trig_wavenumber<R>(basis.kind(), j) * pi;
    kin += kw * kw / R(2);
  }
  auto diag_sum = [&](const std::vector<C>& k) {
    C s(R(0));
    for (std::size_t j = 0; j < M; ++j) {
      switch (basis.kind()) {
        case BasisKind::trig_even: s += (k[0] + k[2 * j + 1]) / R(2); break;
        case BasisKind::trig_odd: s += (k[0] - k[2 * j + 2]) / R(2); break;
        default: s += k[0] - k[2 * j + 2]; break;
      }
    }
    return s;
  };
  const C il = C(R(1)) / L;
  const C il2 = il * il;
  TraceEval<R> out;
  out.value = kin * il2 + diag_sum(kt.k);
  if (order >= 1) out.gradient = {R(-2) * kin * il2 * il + diag_sum(kt.dk)};
  if (order >= 2) {
    out.hessian = Matrix<C>(1, 1);
    out.hessian(0, 0) = R(6) * kin * il2 * il2 + diag_sum(kt.d2k);
  }
  return out;
}

}  // namespace me_detail

template <class R>
RRMatrix<R> build_matrix(const BasisSpec& basis, const PotentialSpec& potential, const ParamPoint<R>& params,
                         std::size_t M, std::size_t extra) {
  if (M == 0) throw Error("matrix dimension must be positive");
  check_supported(basis, potential);
  check_params(basis, params.template convert<double>());
  RRMatrix<R> out;
  out.M = M;
  out.params = params;
  out.sector = to_string(basis.sector());
  if (basis.oscillator())
    out.entries = me_detail::oscillator_matrix<R>(basis, potential, params, M, extra);
  else
    out.entries = me_detail::trig_matrix<R>(basis, potential, *params.L, M);
  return out;
}

template <class R>
TraceFunction<R>::TraceFunction(BasisSpec basis, PotentialSpec potential, std::size_t M)
    : basis_(std::move(basis)), potential_(std::move(potential)), M_(M) {
  if (M_ == 0) throw Error("matrix dimension must be positive");
  check_supported(basis_, potential_);
  if (basis_.oscillator()) laurent_ = me_detail::oscillator_trace<R>(basis_, potential_, M_);
}

template <class R>
const LaurentTrace<R>& TraceFunction<R>::laurent() const {
  if (!laurent_) throw Error("trace has no Laurent representation for this basis");
  return *laurent_;
}

template <class R>
TraceEval<R> TraceFunction<R>::evaluate(const std::vector<std::complex<R>>& x, int order) const {
  if (x.size() != arity()) throw InvalidParams("trace evaluated with the wrong number of parameters");
  if (laurent_) return me_detail::eval_laurent(*laurent_, x, order);
  return me_detail::trig_trace<R>(basis_, potential_, M_, x[0], order);
}

}  // namespace resonax
