#include "resonax/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "resonax/eigensolver.hpp"
#include "resonax/errors.hpp"
#include "resonax/quadrature.hpp"

namespace resonax {

namespace {

using C = std::complex<double>;

constexpr std::size_t kPanelNodes = 20;

// V without the centrifugal part (absorbed by the radial oscillator basis)
C regular_potential(const PotentialSpec& potential, C z) {
  C v = 0.0;
  for (const auto& t : potential.terms) {
    if (t.kind == TermKind::centrifugal) continue;
    PotentialSpec one;
    one.terms = {t};
    v += eval(one, z);
  }
  return v;
}

// (H phi_m)(z) / phi_m(z) pieces: H phi_m = kinetic_factor * phi_m + V phi_m
C kinetic_factor(const BasisSpec& basis, const ParamPoint<double>& params, std::size_t m, C z) {
  const double k = static_cast<double>(basis.function_index(m));
  switch (basis.kind()) {
    case BasisKind::ho:
    case BasisKind::shifted_ho: {
      const C w = *params.omega;
      const C y = z - (params.t ? *params.t : C(0.0));
      return 0.5 * (w * (2.0 * k + 1.0) - w * w * y * y);
    }
    case BasisKind::radial_ho: {
      const C w = *params.omega;
      return w * (2.0 * k + basis.Lambda() + 1.5) - 0.5 * w * w * z * z;
    }
    case BasisKind::trig_even: {
      const C q = (k + 0.5) * M_PI / *params.L;
      return 0.5 * q * q;
    }
    default: {
      const C q = (k + 1.0) * M_PI / *params.L;
      return 0.5 * q * q;
    }
  }
}

}  // namespace

std::complex<double> quadrature_element(const BasisSpec& basis, const PotentialSpec& potential,
                                        const ParamPoint<double>& params, std::size_t j, std::size_t m,
                                        std::size_t nodes, bool overlap) {
  check_params(basis, params);
  const std::size_t panels = std::max<std::size_t>(1, nodes / kPanelNodes);
  const auto& rule = gauss_legendre<double>(kPanelNodes);
  const bool radial_ho = basis.kind() == BasisKind::radial_ho;

  // integration variable s on [a, b]; z(s) runs along the contour on which the
  // oscillator functions are real-shaped: x = t + s e^{-i arg(Omega)/2}
  double a = -1.0, b = 1.0;
  C ray = 1.0;
  C origin = 0.0;
  if (basis.oscillator()) {
    ray = std::polar(1.0, -std::arg(*params.omega) / 2.0);
    if (params.t) origin = *params.t;
  }
  auto point = [&](double s, C& z, C& dz) {
    if (basis.trigonometric()) {
      z = *params.L * s;
      dz = *params.L;
    } else if (radial_ho) {
      z = s * s * ray;
      dz = 2.0 * s * ray;
    } else {
      z = origin + s * ray;
      dz = ray;
    }
  };
  if (basis.trigonometric()) {
    a = basis.radial() ? 0.0 : -1.0;
  } else {
    const double k = static_cast<double>(std::max(basis.function_index(j), basis.function_index(m)));
    // |phi|^2 ~ exp(-|Omega| s^2) past the turning point sqrt(2k+1)
    const double reach = (std::sqrt(2.0 * k + 2.0) + 7.0) / std::sqrt(std::abs(*params.omega));
    if (radial_ho) {
      a = 0.0;
      b = std::sqrt(reach);
    } else {
      a = -reach;
      b = reach;
    }
  }

  C sum = 0.0;
  const double width = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    for (std::size_t i = 0; i < kPanelNodes; ++i) {
      const double s = lo + 0.5 * width * (rule.nodes[i] + 1.0);
      const double w = 0.5 * width * rule.weights[i];
      C z, dz;
      point(s, z, dz);
      if (radial_ho && s == 0.0) continue;
      const C fj = eval_fn_at(basis, j, params, z);
      const C fm = eval_fn_at(basis, m, params, z);
      C hm = fm;
      if (!overlap) {
        const C v = radial_ho ? regular_potential(potential, z) : eval(potential, z);
        hm = (kinetic_factor(basis, params, m, z) + v) * fm;
      }
      sum += w * dz * fj * hm;
    }
  }
  return sum;
}

std::vector<std::complex<double>> rotated_grid_solve(const PotentialSpec& potential, const GridSolveSpec& spec) {
  if (spec.N < 64) throw Error("grid solve needs at least 64 points");
  if (!(spec.theta > 0.0 && spec.theta < M_PI / 2)) throw Error("rotation angle must lie in (0, pi/2)");
  const bool half = spec.domain == Domain::half_line;
  const std::size_t n = spec.N;
  const double h = (half ? spec.R : 2.0 * spec.R) / static_cast<double>(n + 1);
  const double x0 = half ? 0.0 : -spec.R;
  const C rot = std::polar(1.0, spec.theta);
  // -e^{-2i theta}/2 * (-f_{i-2} + 16 f_{i-1} - 30 f_i + 16 f_{i+1} - f_{i+2}) / (12 h^2)
  const C kin = -std::polar(1.0, -2.0 * spec.theta) / (24.0 * h * h);

  SymmetricBand band;
  band.n = n;
  band.diagonals.assign(3, std::vector<C>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double x = x0 + h * static_cast<double>(i + 1);
    double centre = -30.0;
    // antisymmetric ghost points beyond each wall
    if (i == 0 || i + 1 == n) centre += 1.0;
    band.diagonals[0][i] = kin * centre + eval(potential, x * rot);
    band.diagonals[1][i] = kin * 16.0;
    band.diagonals[2][i] = kin * -1.0;
  }
  return symmetric_band_eigenvalues(band);
}

std::complex<double> nearest(const std::vector<std::complex<double>>& values, std::complex<double> target) {
  if (values.empty()) throw Error("no eigenvalues to search");
  return *std::min_element(values.begin(), values.end(),
                           [&](C a, C b) { return std::abs(a - target) < std::abs(b - target); });
}

}  // namespace resonax
