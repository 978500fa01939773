#pragma once

#include <complex>
#include <vector>

#include "resonax/basis.hpp"
#include "resonax/potentials.hpp"

namespace resonax {

// Independent checks in binary64: brute-force quadrature of single matrix
// elements, and a complex-rotated finite-difference grid solver.

// c-product element (phi_j | H | phi_m) by composite Gauss-Legendre. H phi_m
// comes from the eigen-equation each basis family satisfies, so no numerical
// differentiation is involved. With `overlap` set, returns (phi_j | phi_m).
std::complex<double> quadrature_element(const BasisSpec& basis, const PotentialSpec& potential,
                                        const ParamPoint<double>& params, std::size_t j, std::size_t m,
                                        std::size_t nodes = 400, bool overlap = false);

struct GridSolveSpec {
  double theta = 0.3;  // rotation angle, in (0, pi/2)
  double R = 12.0;     // box radius; tails beyond must be negligible (caller's job)
  std::size_t N = 2000;
  Domain domain = Domain::full_line;
};

// All eigenvalues of -e^{-2i theta}/2 d^2/dx^2 + V(x e^{i theta}) on a
// uniform grid with the 5-point Laplacian and Dirichlet walls (at +-R, or at
// 0 and R on the half-line).
std::vector<std::complex<double>> rotated_grid_solve(const PotentialSpec& potential, const GridSolveSpec& spec);

// Eigenvalue in `values` closest to `target`.
std::complex<double> nearest(const std::vector<std::complex<double>>& values, std::complex<double> target);

}  // namespace resonax
