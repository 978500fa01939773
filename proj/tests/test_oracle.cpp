#include "doctest.h"

#include <cmath>

#include "resonax/oracle.hpp"

using namespace resonax;
using C = std::complex<double>;

TEST_CASE("oscillator bound states survive rotation") {
  GridSolveSpec g;
  g.theta = 0.3;
  g.R = 12.0;
  g.N = 2000;
  const auto v = rotated_grid_solve(harmonic(), g);
  CHECK(v.size() == g.N);
  for (double e : {0.5, 1.5, 2.5}) CHECK(std::abs(nearest(v, e) - e) < 1e-5);
}

TEST_CASE("gaussian-quartic ground resonance on the grid") {
  GridSolveSpec g;
  g.theta = 0.4;
  g.R = 20.0;
  const C target(-4.56656551, -0.00885345);
  const C z = nearest(rotated_grid_solve(gaussian_quartic(0.08), g), target);
  CHECK(std::abs(z - target) < 1e-4);
  g.theta = 0.45;
  CHECK(std::abs(nearest(rotated_grid_solve(gaussian_quartic(0.08), g), z) - z) < 1e-5);
}

TEST_CASE("bardsley resonance on the half line, continuum swings with theta") {
  GridSolveSpec g;
  g.theta = 0.4;
  g.R = 20.0;
  g.domain = Domain::half_line;
  const auto a = rotated_grid_solve(bardsley(7.5), g);
  const C target(3.42639, -0.0127745);
  const C z = nearest(a, target);
  CHECK(std::abs(z - target) < 1e-4);

  g.theta = 0.45;
  const auto b = rotated_grid_solve(bardsley(7.5), g);
  CHECK(std::abs(nearest(b, z) - z) < 1e-5);

  // threshold 0: continuum lies along arg = -2 theta
  const C cont = nearest(a, std::polar(5.0, -0.8));
  CHECK(std::abs(std::arg(cont) + 0.8) < 0.05);
  CHECK(std::abs(nearest(b, cont) - cont) > 0.1);
}
