#pragma once

#include <complex>
#include <vector>

#include "resonax/matrix.hpp"
#include "resonax/numeric.hpp"

namespace resonax {

// All eigenvalues of a general dense complex matrix: diagonal balancing,
// Householder reduction to Hessenberg form, then single-shift complex QR
// with Wilkinson shifts. Eigenvalues are returned in deflation order.
// Throws ConvergenceError carrying the index of the unconverged eigenvalue.
template <class R>
std::vector<std::complex<R>> general_eigenvalues(Matrix<std::complex<R>> a, bool balance = true);

// Eigenvalues of a complex symmetric tridiagonal matrix (diagonal `d`,
// off-diagonal `e` with e[i] coupling i and i+1) by implicit QL with complex
// orthogonal rotations. O(n^2).
template <class R>
std::vector<std::complex<R>> symmetric_tridiagonal_eigenvalues(std::vector<std::complex<R>> d,
                                                               std::vector<std::complex<R>> e);

// Complex symmetric band matrix stored by diagonals: band[k][i] = A(i, i+k)
// for k = 0..bandwidth.
struct SymmetricBand {
  std::size_t n = 0;
  std::vector<std::vector<std::complex<double>>> diagonals;
};

// Eigenvalues of a complex symmetric band matrix with half-bandwidth <= 2:
// bulge-chasing reduction to tridiagonal form followed by complex QL.
std::vector<std::complex<double>> symmetric_band_eigenvalues(const SymmetricBand& band);

// Sharpens an eigenvalue of a complex symmetric binary64 matrix: inverse
// iteration for the eigenvector, then the bilinear Rayleigh quotient
// v^T A v / v^T v accumulated in double-double. Converges to the exact
// eigenvalue of the stored matrix rather than the QR backward-error ball.
// With `exact` given, the quotient uses that unrounded matrix instead, so the
// result is the eigenvalue of `exact` to well below binary64 resolution.
std::complex<double> polish_symmetric_eigenvalue(const Matrix<std::complex<double>>& a,
                                                 std::complex<double> lambda, int rounds = 2,
                                                 const Matrix<std::complex<DoubleDouble>>* exact = nullptr);

}  // namespace resonax
