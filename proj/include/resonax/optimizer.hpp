#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "resonax/matelem.hpp"

namespace resonax {

struct RootCandidate {
  ParamPoint<double> params;
  double residual = 0.0;  // |trace gradient| at the root
  bool valid = false;     // inside the validity region
};

struct OptimizerOptions {
  // multi-start grid for evaluator traces, in units of the potential's length scale
  std::size_t grid_n = 8;
  double grid_re_min = 0.2, grid_re_max = 5.0;
  double grid_im_min = 0.05, grid_im_max = 5.0;
  double newton_tol = 1e-13;
  int max_iterations = 60;
  double dedup_tol = 1e-8;
  bool keep_invalid = false;  // report roots outside the validity region too
  // Extra Newton start, also used as the first rung's history.
  std::optional<std::vector<std::complex<double>>> seed;
};

struct LadderPlan {
  std::vector<std::size_t> M_list;
  std::vector<std::optional<ParamPoint<double>>> seeds;  // per rung; empty entries mean "continue"

  // Throws ConfigError unless M_list is non-empty, sorted and unique.
  void validate() const;
};

// Roots of sum_k coeffs[k] z^k by companion-matrix eigenvalues, each
// refined by a few Newton steps on the polynomial.
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& coeffs);

// Stationary points of the trace. Laurent traces in one variable: all roots
// of the cleared-denominator polynomial. Shifted oscillator: two-variable
// Newton from a grid in (Omega, t). Evaluator traces: Newton multi-start.
// Roots are refined in R. Throws ConvergenceError when no valid root exists.
template <class R>
std::vector<RootCandidate> stationary_points(const TraceFunction<R>& tf, const OptimizerOptions& options = {});

// With history: the candidate nearest to it. Without: the valid candidate
// strictly inside the open wedge (Re > 0 and Im Omega < 0, or Im L > 0)
// with the smallest |arg|, i.e. the least rotation; falls back to the smallest residual with ties
// broken by the largest |Im|. Throws Error on an empty list.
ParamPoint<double> select_root(const std::vector<RootCandidate>& candidates, const BasisSpec& basis,
                               const std::optional<ParamPoint<double>>& history = std::nullopt);

// Coupled (Omega, t) stationarity for the shifted oscillator basis.
template <class R>
ParamPoint<double> optimize_shifted(const TraceFunction<R>& tf, const OptimizerOptions& options = {},
                                    const std::optional<ParamPoint<double>>& history = std::nullopt);

// Newton refinement of a root in working precision R.
template <class R>
ParamPoint<R> polish_root(const TraceFunction<R>& tf, const ParamPoint<double>& root, int max_iterations = 12);

}  // namespace resonax
