#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "resonax/matelem.hpp"

namespace resonax {

// Eigenvalues of one rung, sorted by real part. For extended tiers the
// working-precision values are kept as decimal text alongside.
struct EigenSet {
  std::size_t M = 0;
  ParamPoint<double> params;
  std::vector<std::complex<double>> eigenvalues;
  std::vector<std::pair<std::string, std::string>> text;  // (Re, Im); empty for binary64
  int digits = 16;
};

struct Pairing {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (prev index, curr index)
  std::vector<std::size_t> unpaired;                       // current eigenvalues with no partner
};

struct RungRecord {
  std::size_t M = 0;
  ParamPoint<double> params;
  std::complex<double> epsilon;
  std::string E_text, Gamma_text;  // working-precision decimals; empty for binary64
  double converged_digits = -1.0;  // from the drift to the previous rung; -1 on the first
};

struct ResonanceResult {
  std::size_t index = 0;  // ascending E within the sector
  std::string sector;
  double E = 0.0;
  double Gamma = 0.0;
  std::string E_text, Gamma_text;  // working-precision decimals
  double converged_digits = 0.0;
  std::complex<double> epsilon() const { return {E, -Gamma / 2.0}; }
  std::vector<RungRecord> history;  // oldest first
};

// All M eigenvalues of the matrix (general dense QR, no conjugation).
template <class R>
EigenSet eigenvalues(const RRMatrix<R>& matrix);

// Greedy nearest-neighbour pairing restricted to distance < window.
Pairing match_ladder(const EigenSet& prev, const EigenSet& curr, double window = 0.5);

// Eigenvalues of the last rung whose drift from the previous rung is below
// tol and whose imaginary part is not positive (beyond tol).
std::vector<ResonanceResult> resonances(const std::vector<EigenSet>& ladder, double tol = 1e-8,
                                        double window = 0.5, const std::string& sector = "");

}  // namespace resonax
