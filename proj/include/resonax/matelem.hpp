#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "resonax/basis.hpp"
#include "resonax/matrix.hpp"
#include "resonax/potentials.hpp"

namespace resonax {

// Complex symmetric RR matrix under the c-product (no conjugation).
template <class R>
struct RRMatrix {
  std::size_t M = 0;
  Matrix<std::complex<R>> entries;
  ParamPoint<R> params;
  std::string sector;
};

// T(Omega, t) = A Omega + sum_{m,q} c[m][q] t^q Omega^{-m}.
template <class R>
struct LaurentTrace {
  std::complex<R> A{};
  std::vector<std::vector<std::complex<R>>> c;
  bool shifted = false;
};

// Trace value with its gradient and Hessian over the active parameters.
template <class R>
struct TraceEval {
  std::complex<R> value{};
  std::vector<std::complex<R>> gradient;
  Matrix<std::complex<R>> hessian;
};

// Throws Unsupported when the pair has no matrix-element route.
void check_supported(const BasisSpec& basis, const PotentialSpec& potential);

// Builds the M x M matrix. Oscillator families work in dimension enlarged
// by the largest power (plus `extra`) and truncate, so the retained block is
// exact; trig families use closed-form kernels or Gauss-Legendre quadrature.
template <class R>
RRMatrix<R> build_matrix(const BasisSpec& basis, const PotentialSpec& potential, const ParamPoint<R>& params,
                         std::size_t M, std::size_t extra = 0);

// Trace of the M x M matrix as a function of the nonlinear parameters.
// Oscillator families carry an explicit Laurent polynomial; trig families
// evaluate the kernels directly.
template <class R>
class TraceFunction {
 public:
  TraceFunction(BasisSpec basis, PotentialSpec potential, std::size_t M);

  const BasisSpec& basis() const { return basis_; }
  const PotentialSpec& potential() const { return potential_; }
  std::size_t M() const { return M_; }
  std::size_t arity() const { return basis_.param_names().size(); }

  bool is_laurent() const { return laurent_.has_value(); }
  const LaurentTrace<R>& laurent() const;

  // order 0: value; 1: + gradient; 2: + Hessian.
  TraceEval<R> evaluate(const std::vector<std::complex<R>>& x, int order = 1) const;

  std::complex<R> value(const ParamPoint<R>& p) const { return evaluate(basis_.pack(p), 0).value; }
  std::vector<std::complex<R>> gradient(const ParamPoint<R>& p) const { return evaluate(basis_.pack(p), 1).gradient; }

 private:
  BasisSpec basis_;
  PotentialSpec potential_;
  std::size_t M_;
  std::optional<LaurentTrace<R>> laurent_;
};

template <class R>
TraceFunction<R> trace_fn(const BasisSpec& basis, const PotentialSpec& potential, std::size_t M) {
  return TraceFunction<R>(basis, potential, M);
}

// Trig kernels K(n) = integral of cos(n pi u) V(L u) over the reduced
// interval ([0,1] for radial, [-1,1] otherwise), with L-derivatives.
template <class R>
struct KernelTable {
  std::vector<std::complex<R>> k;
  std::vector<std::complex<R>> dk;
  std::vector<std::complex<R>> d2k;
};

template <class R>
KernelTable<R> trig_kernels(const PotentialSpec& potential, bool half_interval, const std::complex<R>& L,
                            std::size_t nmax, int order, std::size_t M);

// Node count of the Gaussian-term quadrature at dimension M.
inline std::size_t gaussian_nodes(std::size_t M) { return 4 * (M + 8); }

}  // namespace resonax
