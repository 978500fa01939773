#pragma once

#include <algorithm>
#include <cmath>

#include "resonax/eigensolver.hpp"
#include "resonax/errors.hpp"
#include "resonax/optimizer.hpp"

namespace resonax {

namespace opt_detail {

using C = std::complex<double>;

template <class R>
bool finite_all(const std::vector<std::complex<R>>& x) {
  using std::isfinite;
  return std::all_of(x.begin(), x.end(), [](const std::complex<R>& z) { return isfinite(z.real()) && isfinite(z.imag()); });
}

// Newton step d solving H d = g for one or two unknowns; false if singular.
template <class R>
bool newton_step(const TraceEval<R>& ev, std::vector<std::complex<R>>& d) {
  using Cx = std::complex<R>;
  const std::size_t n = ev.gradient.size();
  d.assign(n, Cx(R(0)));
  if (n == 1) {
    if (ev.hessian(0, 0) == Cx(R(0))) return false;
    d[0] = ev.gradient[0] / ev.hessian(0, 0);
    return true;
  }
  const Cx det = ev.hessian(0, 0) * ev.hessian(1, 1) - ev.hessian(0, 1) * ev.hessian(1, 0);
  if (det == Cx(R(0))) return false;
  d[0] = (ev.hessian(1, 1) * ev.gradient[0] - ev.hessian(0, 1) * ev.gradient[1]) / det;
  d[1] = (ev.hessian(0, 0) * ev.gradient[1] - ev.hessian(1, 0) * ev.gradient[0]) / det;
  return true;
}

inline double norm_inf(const std::vector<C>& x) {
  double s = 0;
  for (const auto& z : x) s = std::max(s, std::abs(z));
  return s;
}

// Damped Newton in binary64 from x; returns true on convergence.
inline bool newton_solve(const TraceFunction<double>& tf, std::vector<C>& x, const OptimizerOptions& opt, double scale) {
  std::vector<C> d;
  for (int it = 0; it < opt.max_iterations; ++it) {
    TraceEval<double> ev;
    try {
      ev = tf.evaluate(x, 2);
    } catch (const Error&) {
      return false;
    }
    if (!finite_all(ev.gradient) || !newton_step(ev, d) || !finite_all(d)) return false;
    // limit wild jumps from poor starts
    const double limit = 0.5 * std::max(norm_inf(x), scale);
    const double len = norm_inf(d);
    if (len > limit)
      for (auto& z : d) z *= limit / len;
    for (std::size_t k = 0; k < x.size(); ++k) x[k] -= d[k];
    if (norm_inf(d) <= opt.newton_tol * std::max(1.0, norm_inf(x))) return true;
    if (norm_inf(x) > 1e6 * std::max(1.0, scale)) return false;
  }
  return false;
}

inline bool near_duplicate(const std::vector<C>& a, const std::vector<C>& b, double tol) {
  double diff = 0;
  for (std::size_t k = 0; k < a.size(); ++k) diff = std::max(diff, std::abs(a[k] - b[k]));
  return diff <= tol * std::max(1.0, norm_inf(a));
}

}  // namespace opt_detail

template <class R>
ParamPoint<R> polish_root(const TraceFunction<R>& tf, const ParamPoint<double>& root, int max_iterations) {
  using Cx = std::complex<R>;
  using std::abs;
  auto x = tf.basis().pack(root.template convert<R>());
  const R eps = RealTraits<R>::epsilon();
  std::vector<Cx> d;
  for (int it = 0; it < max_iterations; ++it) {
    const auto ev = tf.evaluate(x, 2);
    if (!opt_detail::newton_step(ev, d) || !opt_detail::finite_all(d)) break;
    R len = 0, size = 1;
    for (std::size_t k = 0; k < x.size(); ++k) {
      x[k] -= d[k];
      len = std::max(len, R(abs(d[k])));
      size = std::max(size, R(abs(x[k])));
    }
    if (len <= R(16) * eps * size) break;
  }
  return tf.basis().unpack(x);
}

template <class R>
std::vector<RootCandidate> stationary_points(const TraceFunction<R>& tf, const OptimizerOptions& opt) {
  using opt_detail::C;
  const BasisSpec& basis = tf.basis();
  const TraceFunction<double> tfd(basis, tf.potential(), tf.M());
  std::vector<std::vector<C>> roots;

  auto add_root = [&](std::vector<C> x) {
    for (const auto& r : roots)
      if (opt_detail::near_duplicate(r, x, opt.dedup_tol)) return;
    roots.push_back(std::move(x));
  };

  const double scale = characteristic_length(tf.potential());
  if (tfd.is_laurent() && tfd.arity() == 1) {
    const auto& lt = tfd.laurent();
    const std::size_t K = lt.c.size() - 1;
    // dT/dOmega * Omega^{K+1} = A Omega^{K+1} - sum_m m c_m Omega^{K-m}
    std::vector<C> poly(K + 2, 0.0);
    poly[K + 1] = lt.A;
    for (std::size_t m = 1; m <= K; ++m) poly[K - m] -= static_cast<double>(m) * lt.c[m][0];
    for (const auto& z : polynomial_roots(poly)) {
      if (z == 0.0) continue;
      std::vector<C> x{z};
      opt_detail::newton_solve(tfd, x, opt, 1.0);
      add_root(x);
    }
  } else {
    std::vector<std::vector<C>> starts;
    if (basis.kind() == BasisKind::shifted_ho) {
      for (double wr : {0.5, 1.0, 2.0})
        for (double wi : {-0.2, -1.0, -2.0})
          for (double tr : {-2.0, -0.5, 0.5, 2.0})
            for (double ti : {-3.0, -1.0, 1.0, 3.0}) starts.push_back({C(wr, wi), C(tr, ti)});
    } else {
      const std::size_t n = std::max<std::size_t>(opt.grid_n, 1);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const double fa = n == 1 ? 0.0 : static_cast<double>(a) / static_cast<double>(n - 1);
          const double fb = n == 1 ? 0.0 : static_cast<double>(b) / static_cast<double>(n - 1);
          const double re = (opt.grid_re_min + fa * (opt.grid_re_max - opt.grid_re_min)) * scale;
          const double im = (opt.grid_im_min + fb * (opt.grid_im_max - opt.grid_im_min)) * scale;
          starts.push_back({C(re, im)});
        }
    }
    if (opt.seed) starts.insert(starts.begin(), *opt.seed);
    for (auto x : starts) {
      if (x.size() != tfd.arity()) throw ConfigError("optimizer seed has the wrong number of parameters");
      if (opt_detail::newton_solve(tfd, x, opt, scale)) add_root(x);
    }
  }

  std::vector<RootCandidate> out;
  for (const auto& x : roots) {
    RootCandidate c;
    const ParamPoint<R> pr = polish_root(tf, basis.unpack(x));
    const auto ev = tf.evaluate(basis.pack(pr), 1);
    c.params = pr.template convert<double>();
    double g = 0;
    for (const auto& z : ev.gradient) g = std::max(g, std::abs(to_double(z)));
    c.residual = g;
    c.valid = in_validity_region(basis, c.params);
    const double tval = std::abs(to_double(ev.value));
    if (!(g <= 1e-10 * std::max(1.0, tval))) continue;  // Newton stalled short of a root
    if (c.valid || opt.keep_invalid) out.push_back(c);
  }
  if (!opt.keep_invalid && out.empty())
    throw ConvergenceError("no valid stationary point of the trace at M=" + std::to_string(tf.M()), -1);
  return out;
}

template <class R>
ParamPoint<double> optimize_shifted(const TraceFunction<R>& tf, const OptimizerOptions& options,
                                    const std::optional<ParamPoint<double>>& history) {
  if (tf.basis().kind() != BasisKind::shifted_ho) throw Error("optimize_shifted needs the shifted oscillator basis");
  return select_root(stationary_points(tf, options), tf.basis(), history);
}

}  // namespace resonax
