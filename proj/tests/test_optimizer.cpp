#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "resonax/errors.hpp"
#include "resonax/optimizer.hpp"
#include "resonax/pipeline.hpp"

using namespace resonax;
using C = std::complex<double>;

namespace {

ParamPoint<> om(C w) {
  ParamPoint<> p;
  p.omega = w;
  return p;
}

RootCandidate cand(C w, double residual = 1e-14) {
  return {om(w), residual, true};
}

bool contains(const std::vector<RootCandidate>& roots, C z, double tol) {
  return std::any_of(roots.begin(), roots.end(), [&](const RootCandidate& c) {
    const auto v = c.params.omega ? *c.params.omega : *c.params.L;
    return std::abs(v - z) < tol;
  });
}

double gradient_ratio(const TraceFunction<double>& tf, const ParamPoint<>& p) {
  double g = 0;
  for (const auto& d : tf.gradient(p)) g = std::max(g, std::abs(d));
  return g / std::max(1.0, std::abs(tf.value(p)));
}

}  // namespace

TEST_CASE("companion-matrix polynomial roots") {
  // (z - 1)(z - 2i)(z + 3) = z^3 + (2 - 2i) z^2 - (3 + 4i) z + 6i
  const auto roots = polynomial_roots({C(0, 6), C(-3, -4), C(2, -2), C(1, 0)});
  REQUIRE(roots.size() == 3);
  for (C want : {C(1, 0), C(0, 2), C(-3, 0)}) {
    const bool hit = std::any_of(roots.begin(), roots.end(), [&](C z) { return std::abs(z - want) < 1e-13; });
    CHECK(hit);
  }
  // trailing zero coefficients and roots at the origin
  const auto z2 = polynomial_roots({0.0, 0.0, -4.0, 1.0, 0.0});
  REQUIRE(z2.size() == 3);
  CHECK(std::count(z2.begin(), z2.end(), C(0.0)) == 2);
}

TEST_CASE("ladder plan validation") {
  auto check = [](std::vector<std::size_t> m) { LadderPlan{std::move(m), {}}.validate(); };
  CHECK_NOTHROW(check({20, 25, 30}));
  CHECK_THROWS_AS(check({}), ConfigError);
  CHECK_THROWS_AS(check({20, 20}), ConfigError);
  CHECK_THROWS_AS(check({30, 20}), ConfigError);
  CHECK_THROWS_AS(check({0, 5}), ConfigError);
}

TEST_CASE("pure oscillator has the single valid root Omega = 1") {
  for (Sector s : {Sector::even, Sector::odd, Sector::all}) {
    for (std::size_t M : {1u, 4u, 15u, 40u}) {
      const TraceFunction<double> tf(make_basis(BasisKind::ho, s), harmonic(), M);
      const auto roots = stationary_points(tf);
      REQUIRE(roots.size() == 1);
      CHECK(std::abs(*roots[0].params.omega - 1.0) < 1e-13);
      CHECK(select_root(roots, tf.basis()).omega == roots[0].params.omega);
    }
  }
}

TEST_CASE("published stationary points are among the candidates") {
  const TraceFunction<double> q(make_basis(BasisKind::ho, Sector::even), quartic(0.02), 20);
  CHECK(contains(stationary_points(q), C(0.723, -0.754), 1e-3));
  const TraceFunction<double> s(make_basis(BasisKind::ho, Sector::even), triple_well(0.3), 30);
  CHECK(contains(stationary_points(s), C(0.5163, -3.1840), 1e-4));
}

TEST_CASE("every reported root has a tiny trace gradient") {
  const std::vector<TraceFunction<double>> cases = {
      {make_basis(BasisKind::ho, Sector::even), quartic(0.02), 25},
      {make_basis(BasisKind::ho, Sector::odd), triple_well(0.3), 20},
      {make_basis(BasisKind::ho, Sector::all), cubic(0.1), 20},
      {make_basis(BasisKind::radial_ho, Sector::radial, reduce_radial(1, 2).Lambda),
       mexican_hat(0.1, reduce_radial(1, 2)), 15},
      {make_basis(BasisKind::trig_even, Sector::even), gaussian_quartic(0.08), 20},
      {make_basis(BasisKind::trig_odd, Sector::odd), gaussian_quartic(0.01), 20},
  };
  for (const auto& tf : cases) {
    const auto roots = stationary_points(tf);
    REQUIRE(!roots.empty());
    for (const auto& r : roots) {
      CHECK(r.valid);
      CHECK(gradient_ratio(tf, r.params) < 1e-10);
      CHECK(r.residual < 1e-10 * std::max(1.0, std::abs(tf.value(r.params))));
    }
  }
}

TEST_CASE("root selection") {
  const auto ho = make_basis(BasisKind::ho, Sector::even);
  SUBCASE("real root rejected on the first rung") {
    const auto p = select_root({cand(1.0, 1e-16), cand(C(0.72, -0.75), 1e-13)}, ho);
    CHECK(*p.omega == C(0.72, -0.75));
  }
  SUBCASE("history picks the nearest") {
    const auto p = select_root({cand(C(0.79, -0.94)), cand(C(0.80, -2.1))}, ho, om(C(0.759, -0.853)));
    CHECK(*p.omega == C(0.79, -0.94));
  }
  SUBCASE("single candidate") {
    CHECK(*select_root({cand(C(2.0, -0.1))}, ho).omega == C(2.0, -0.1));
  }
  SUBCASE("least rotation inside the wedge") {
    const auto p = select_root({cand(C(0.5, -3.0)), cand(C(2.0, -0.5)), cand(C(-1.0, -0.1))}, ho);
    CHECK(*p.omega == C(2.0, -0.5));
  }
  SUBCASE("trig wedge is Im L > 0") {
    const auto trig = make_basis(BasisKind::trig_even, Sector::even);
    ParamPoint<> a, b;
    a.L = C(4.03, 6.50);
    b.L = C(8.261, 4.726);
    CHECK(*select_root({{a, 1e-14, true}, {b, 1e-14, true}}, trig).L == C(8.261, 4.726));
  }
  SUBCASE("empty and all-invalid lists throw") {
    CHECK_THROWS_AS(select_root({}, ho), Error);
    CHECK_THROWS_AS(select_root({{om(1.0), 0.0, false}}, ho), Error);
  }
}

TEST_CASE("shifted oscillator optimizer") {
  const auto basis = make_basis(BasisKind::shifted_ho, Sector::all);
  SUBCASE("cubic branch matches the published parameters") {
    const TraceFunction<double> tf20(basis, cubic(0.1), 20);
    const auto p20 = optimize_shifted(tf20);
    CHECK(std::abs(*p20.omega - C(1.02, -0.66)) < 2e-2);
    CHECK(std::abs(*p20.t - C(-0.67, -2.26)) < 2e-2);
    CHECK(gradient_ratio(tf20, p20) < 1e-10);

    // continue along the ladder to M=40
    ParamPoint<> prev = p20;
    for (std::size_t M : {30u, 40u}) prev = optimize_shifted(TraceFunction<double>(basis, cubic(0.1), M), {}, prev);
    CHECK(std::abs(*prev.omega - C(1.18, -0.81)) < 2e-2);
    CHECK(std::abs(*prev.t - C(-0.43, -3.20)) < 2e-2);
  }
  SUBCASE("even potential has a stationary branch at t = 0") {
    const TraceFunction<double> ho_tf(make_basis(BasisKind::ho, Sector::all), quartic(0.02), 20);
    const auto w = select_root(stationary_points(ho_tf), ho_tf.basis());
    const TraceFunction<double> tf(basis, quartic(0.02), 20);
    ParamPoint<> p = w;
    p.t = C(0.0);
    CHECK(gradient_ratio(tf, p) < 1e-10);
  }
}

TEST_CASE("extended polish keeps the root and sharpens it") {
  const auto basis = make_basis(BasisKind::ho, Sector::even);
  const TraceFunction<double> tf(basis, triple_well(0.3), 30);
  const auto root = select_root(stationary_points(tf), basis);
  const TraceFunction<DoubleDouble> tfd(basis, triple_well(0.3), 30);
  const auto p = polish_root(tfd, root);
  CHECK(std::abs(to_double(*p.omega) - *root.omega) < 1e-12);
  double g = 0;
  for (const auto& d : tfd.gradient(p)) g = std::max(g, to_double(std::abs(d)));
  CHECK(g < 1e-25);
}

TEST_CASE("quartic continuation does not jump branches") {
  RunConfig cfg;
  cfg.potential = "quartic";
  cfg.couplings["lambda"] = 0.02;
  cfg.sectors = {"even"};
  cfg.M_list = {20, 25, 30, 35};
  const auto report = run(cfg);
  const auto& rungs = report.sectors.at(0).rungs;
  REQUIRE(rungs.size() == 4);
  CHECK(std::abs(*rungs[0].params.omega - C(0.723, -0.754)) < 1e-3);
  for (std::size_t k = 1; k < rungs.size(); ++k)
    CHECK(std::abs(*rungs[k].params.omega - *rungs[k - 1].params.omega) < 0.5);
}
