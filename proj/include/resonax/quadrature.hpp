#pragma once

#include <cstddef>
#include <vector>

namespace resonax {

// Gauss-Legendre rule on [-1, 1].
template <class R>
struct GaussLegendre {
  std::vector<R> nodes;
  std::vector<R> weights;
};

// n-point rule; nodes from Newton iteration on P_n in R, cached per n.
template <class R>
const GaussLegendre<R>& gauss_legendre(std::size_t n);

// Rule mapped to [a, b].
template <class R>
GaussLegendre<R> gauss_legendre_on(std::size_t n, const R& a, const R& b);

}  // namespace resonax
