#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "resonax/errors.hpp"
#include "resonax/numeric.hpp"
#include "resonax/quadrature.hpp"

namespace resonax {

namespace quad_detail {

template <class R>
GaussLegendre<R> compute_rule(std::size_t n) {
  using std::abs;
  GaussLegendre<R> rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const R eps = RealTraits<R>::epsilon();
  const double pi = 3.141592653589793;
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    R x = real_from<R>(std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5)));
    R dp = 0;
    for (int it = 0; it < 100; ++it) {
      R p0 = 1;
      R p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const R p2 = (real_from<R>(2.0 * k - 1.0) * x * p1 - real_from<R>(k - 1.0) * p0) / real_from<R>(double(k));
        p0 = p1;
        p1 = p2;
      }
      dp = real_from<R>(double(n)) * (x * p1 - p0) / (x * x - R(1));
      const R step = p1 / dp;
      x -= step;
      if (it > 0 && abs(step) <= R(4) * eps) break;
    }
    // recompute derivative at the converged node
    R p0 = 1;
    R p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const R p2 = (real_from<R>(2.0 * k - 1.0) * x * p1 - real_from<R>(k - 1.0) * p0) / real_from<R>(double(k));
      p0 = p1;
      p1 = p2;
    }
    dp = real_from<R>(double(n)) * (x * p1 - p0) / (x * x - R(1));
    const R w = R(2) / ((R(1) - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0;
  return rule;
}

}  // namespace quad_detail

template <class R>
const GaussLegendre<R>& gauss_legendre(std::size_t n) {
  if (n == 0) throw Error("Gauss-Legendre rule needs at least one node");
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<GaussLegendre<R>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussLegendre<R>>(quad_detail::compute_rule<R>(n));
  return *slot;
}

template <class R>
GaussLegendre<R> gauss_legendre_on(std::size_t n, const R& a, const R& b) {
  const auto& base = gauss_legendre<R>(n);
  GaussLegendre<R> out;
  const R mid = (a + b) / R(2);
  const R half = (b - a) / R(2);
  for (std::size_t i = 0; i < n; ++i) {
    out.nodes.push_back(mid + half * base.nodes[i]);
    out.weights.push_back(half * base.weights[i]);
  }
  return out;
}

}  // namespace resonax
