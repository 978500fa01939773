// One PASS/FAIL line per acceptance criterion, with wall time. Exit status is
// the number of failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "gated_set.hpp"
#include "resonax/errors.hpp"
#include "resonax/oracle.hpp"
#include "resonax/pipeline.hpp"

using namespace resonax;
using C = std::complex<double>;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << " [failed: " << what << "]";
    }
  }
  void within(double got, double want, double tol, const std::string& what) {
    const double err = std::abs(got - want);
    if (!(err < tol)) {
      pass = false;
      char buf[160];
      std::snprintf(buf, sizeof buf, " [failed: %s = %.17g, off by %.3g, tol %.1g]", what.c_str(), got, err, tol);
      notes << buf;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RunConfig preset(const std::string& name) {
  return load_run_config(std::string(RESONAX_PRESET_DIR) + "/" + name + ".cfg");
}

const SectorReport& sector(const RunReport& r, const std::string& label) {
  for (const auto& s : r.sectors)
    if (s.label == label) return s;
  throw Error("no sector " + label);
}

const RungRecord& state(const SectorReport& s, std::size_t index, std::size_t M) {
  for (const auto& res : s.resonances)
    if (res.index == index)
      for (const auto& h : res.history)
        if (h.M == M) return h;
  throw Error("state " + std::to_string(index) + " of " + s.label + " missing at M=" + std::to_string(M));
}

double E(const RungRecord& h) { return h.epsilon.real(); }
double G(const RungRecord& h) { return -2.0 * h.epsilon.imag(); }

QuadDouble text_or(const std::string& text, double fallback) {
  return text.empty() ? QuadDouble(fallback) : QuadDouble::parse(text);
}

void sextic(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run(preset("sextic-table3"));
  const double t = seconds_since(t0);
  const auto& s = sector(r, "even");
  o.within(E(state(s, 0, 30)), 0.40780397907366957146, 1e-12, "E0");
  o.within(G(state(s, 0, 30)), 0.029400216892153485663, 1e-12, "Gamma0");
  o.within(E(state(s, 2, 30)), 2.60943072337167570, 1e-10, "E4");
  o.within(G(state(s, 2, 30)), 4.79672853029023136, 1e-10, "Gamma4");
  o.require(t < 2.0, "runtime < 2 s");
}

void gaussian(Outcome& o) {
  const auto r = run(preset("gauss-table5"));
  const auto& ev = sector(r, "even");
  const auto& od = sector(r, "odd");
  o.within(E(state(ev, 0, 20)), -4.5665655093777188, 1e-11, "E0(M=20)");
  o.within(G(state(ev, 0, 20)), 0.0177068941054286, 1e-11, "Gamma0(M=20)");
  o.require(std::abs(*state(ev, 0, 20).params.L - C(5.114, 2.888)) < 5e-3, "L_opt(M=20)");
  o.within(E(state(od, 0, 30)), -3.8381035089108826586, 1e-11, "E1(M=30)");
  o.within(G(state(od, 0, 30)), 0.27432159046788112432, 1e-11, "Gamma1(M=30)");

  const auto ra = run(preset("gauss-table5a"));
  const auto& ea = sector(ra, "even");
  o.within(E(state(ea, 0, 30)), -4.5234828721860057186, 1e-12, "E0(lambda=0.01)");
  o.within(G(state(ea, 0, 30)), 2.20682214291e-7, 1e-16, "Gamma0(lambda=0.01)");
}

void mexican(Outcome& o) {
  const auto r = run(preset("mexican-table6"));
  const auto& l0 = sector(r, "l=0");
  const auto& l1 = sector(r, "l=1");
  o.within(E(state(l0, 0, 10)), 0.856745041, 1e-8, "E(l=0,M=10)");
  o.within(G(state(l0, 0, 10)), 0.04543667, 1e-8, "Gamma(l=0,M=10)");
  o.within(E(state(l1, 0, 10)), 1.56818293, 1e-8, "E(l=1,M=10)");
  o.within(G(state(l1, 0, 10)), 0.34682442, 1e-8, "Gamma(l=1,M=10)");
  // M=20: every printed digit, down to the binary64 floor
  const auto floor = [](double x) { return 2e-15 * std::max(1.0, std::abs(x)); };
  o.within(E(state(l0, 0, 20)), 0.8567450411458273172, floor(0.86), "E(l=0,M=20)");
  o.within(G(state(l0, 0, 20)), 0.0454366707025907851, floor(0.86), "Gamma(l=0,M=20)");
  o.within(E(state(l1, 0, 20)), 1.5681829296936992519, floor(1.57), "E(l=1,M=20)");
  o.within(G(state(l1, 0, 20)), 0.346824423557637908916, floor(1.57), "Gamma(l=1,M=20)");
}

void bardsley_case(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run(preset("bardsley-table7"));
  const double t = seconds_since(t0);
  const auto& s = sector(r, "radial");
  // E0 is the narrow state near 3.43; broader ones below it take the low indices
  const RungRecord* e0 = nullptr;
  for (const auto& res : s.resonances)
    for (const auto& h : res.history)
      if (h.M == 180 && (!e0 || std::abs(h.epsilon - C(3.4264, -0.0128)) < std::abs(e0->epsilon - C(3.4264, -0.0128))))
        e0 = &h;
  if (!e0) throw Error("no stabilized state at M=180");
  const QuadDouble dE = text_or(e0->E_text, E(*e0)) - QuadDouble::parse("3.4263903101482505");
  const QuadDouble dG = text_or(e0->Gamma_text, G(*e0)) - QuadDouble::parse("0.025548961185791");
  o.within(static_cast<double>(dE), 0.0, 1e-11, "E0 - 3.4263903101482505");
  o.within(static_cast<double>(dG), 0.0, 1e-11, "Gamma0 - 0.025548961185791");

  const auto closest_at_160 = [&](C target) {
    double best = 1e300;
    for (const auto& res : s.resonances)
      for (const auto& h : res.history)
        if (h.M == 160) best = std::min(best, std::abs(h.epsilon - target));
    return best;
  };
  // targets exactly as the criterion states them
  o.within(closest_at_160({-3.754144, -20.00450749}), 0.0, 1e-6, "distance to -3.754144-20.00450749i at M=160");
  o.within(closest_at_160({-6.80030, -22.7631551}), 0.0, 1e-6, "distance to -6.80030-22.7631551i at M=160");
  // the criterion's E9 target rounds E to five decimals; the M=160 table row
  // itself reads E9 = -6.80030389, Gamma9 = 45.52631015
  char buf[160];
  std::snprintf(buf, sizeof buf, " [info: distance to the full M=160 row -6.80030389-22.763155075i is %.2g]",
                closest_at_160({-6.80030389, -22.763155075}));
  o.notes << buf;
  o.require(t < 60.0, "runtime < 60 s (took " + std::to_string(t) + " s)");
  o.notes << " tier " << r.tier;
}

void cubic_case(Outcome& o) {
  const auto r = run(preset("cubic-table4"));
  const auto& s = sector(r, "all");
  o.within(E(state(s, 0, 40)), 0.484315997004117, 1e-12, "E0(M=40)");
  o.within(G(state(s, 0, 40)), 0.000016120419000, 1e-12, "Gamma0(M=40)");
  struct Row {
    std::size_t M;
    C t, omega;
  };
  for (const Row& row : {Row{20, {-0.67, -2.26}, {1.02, -0.66}}, Row{30, {-0.54, -2.78}, {1.11, -0.75}},
                         Row{40, {-0.43, -3.20}, {1.18, -0.81}}}) {
    const auto& p = state(s, 0, row.M).params;
    o.require(std::abs(*p.t - row.t) < 2e-2 && std::abs(*p.omega - row.omega) < 2e-2,
              "(Omega, t) at M=" + std::to_string(row.M));
  }
}

void quartic_case(Outcome& o) {
  const auto r = run(preset("quartic-table1"));
  const auto& s = sector(r, "even");
  o.within(E(state(s, 0, 35)), 0.49221383488262770042, 1e-13, "E0 (double)");
  const double g = G(state(s, 0, 35));
  o.require(g >= 1e-14 && g <= 1e-13, "Gamma0 in [1e-14, 1e-13] (double)");

  const auto rx = run(preset("quartic-table1-extended"));
  o.require(rx.digits >= 40, "extended run has >= 40 digits");
  const auto& x = state(sector(rx, "even"), 0, 35);
  const double gx = static_cast<double>(text_or(x.Gamma_text, G(x)));
  // four significant figures: 5.109e-14
  o.require(std::abs(gx - 5.109394888394627276e-14) < 0.5e-17, "Gamma0 to 4 figures (extended)");
  o.notes << " extended Gamma0 = " << x.Gamma_text;
}

void properties(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();

  // matrix elements against quadrature
  double worst = 0;
  for (const auto& c : gated::gated_cases()) {
    for (const auto* point : {&c.real_point, &c.complex_point}) {
      const auto m = build_matrix<double>(c.basis, c.potential, *point, 10);
      double scale = 0;
      for (std::size_t j = 0; j < 9; ++j)
        for (std::size_t k = 0; k < 9; ++k) scale = std::max(scale, std::abs(m.entries(j, k)));
      for (std::size_t j = 0; j <= 8; ++j)
        for (std::size_t k = j; k <= 8; ++k)
          worst = std::max(worst, std::abs(quadrature_element(c.basis, c.potential, *point, j, k, 800) - m.entries(j, k)) / scale);
    }
  }
  o.within(worst, 0.0, 1e-11, "oracle deviation");

  // trace roots
  double residual = 0;
  const std::vector<TraceFunction<double>> traces = {
      {make_basis(BasisKind::ho, Sector::even), quartic(0.02), 20},
      {make_basis(BasisKind::ho, Sector::even), triple_well(0.3), 30},
      {make_basis(BasisKind::radial_ho, Sector::radial, reduce_radial(1, 2).Lambda), mexican_hat(0.1, reduce_radial(1, 2)), 10},
      {make_basis(BasisKind::trig_even, Sector::even), gaussian_quartic(0.08), 20},
  };
  for (const auto& tf : traces)
    for (const auto& root : stationary_points(tf)) {
      double g = 0;
      for (const auto& d : tf.gradient(root.params)) g = std::max(g, std::abs(d));
      residual = std::max(residual, g / std::max(1.0, std::abs(tf.value(root.params))));
    }
  {
    const TraceFunction<double> tf(make_basis(BasisKind::shifted_ho, Sector::all), cubic(0.1), 20);
    const auto p = optimize_shifted(tf);
    double g = 0;
    for (const auto& d : tf.gradient(p)) g = std::max(g, std::abs(d));
    residual = std::max(residual, g / std::max(1.0, std::abs(tf.value(p))));
  }
  o.within(residual, 0.0, 1e-10, "trace-root residual");

  // pure oscillator
  RunConfig ho;
  ho.potential = "harmonic";
  ho.M_list = {10, 20, 30};
  const auto hr = run(ho);
  double ho_err = 0;
  for (const auto& rung : hr.sectors.at(0).rungs) {
    ho_err = std::max(ho_err, std::abs(*rung.params.omega - 1.0));
    for (std::size_t n = 0; n < rung.M; ++n) ho_err = std::max(ho_err, std::abs(rung.spectrum.eigenvalues[n] - (n + 0.5)));
  }
  o.within(ho_err, 0.0, 1e-13, "oscillator Omega=1 and n+1/2");

  // sum rule on every rung of several runs
  double sum_err = 0;
  for (const char* name : {"quartic-table1", "sextic-table3", "cubic-table4", "gauss-table5", "mexican-table6"}) {
    const RunConfig rc = preset(name);
    const auto rep = run(rc);
    const auto jobs = rc.jobs();
    for (std::size_t k = 0; k < jobs.size(); ++k)
      for (const auto& rung : rep.sectors[k].rungs) {
        const auto h = build_matrix(jobs[k].basis, jobs[k].potential, rung.params, rung.M);
        C tr = 0.0, sum = 0.0;
        double scale = 0.0;
        for (std::size_t i = 0; i < rung.M; ++i) {
          tr += h.entries(i, i);
          scale += std::abs(h.entries(i, i));
        }
        for (C z : rung.spectrum.eigenvalues) sum += z;
        sum_err = std::max(sum_err, std::abs(sum - tr) / std::max(std::abs(tr), scale));
      }
  }
  o.within(sum_err, 0.0, 1e-11, "eigenvalue sum vs trace");

  // plateau: 5% change of |L| barely moves the resonance
  const RunConfig gc = preset("gauss-table5");
  const auto gr = run(gc);
  const auto& ev = sector(gr, "even");
  const auto& e0 = state(ev, 0, 30);
  const auto job = gc.jobs().at(0);
  double plateau = 0;
  for (double f : {0.95, 1.05}) {
    ParamPoint<DoubleDouble> p;
    p.L = complex_from<DoubleDouble>(*e0.params.L * f);
    const auto set = eigenvalues(build_matrix(job.basis, job.potential, p, 30));
    plateau = std::max(plateau, std::abs(nearest(set.eigenvalues, e0.epsilon) - e0.epsilon));
  }
  o.within(plateau, 0.0, 1e-8, "plateau drift");

  const double t = seconds_since(t0);
  o.require(t < 30.0, "runtime < 30 s");
}

}  // namespace

int main() {
  using Check = std::function<void(Outcome&)>;
  const std::vector<std::pair<std::string, Check>> criteria = {
      {"1 sextic g=0.3, M=30 E0/Gamma0 to 1e-12, E4/Gamma4 to 1e-10, under 2 s", Check(sextic)},
      {"2 gaussian-quartic lambda=0.08 and 0.01, energies, widths and L_opt", Check(gaussian)},
      {"3 mexican hat g=0.1 D=2, l=0 and l=1 at M=10 and M=20", Check(mexican)},
      {"4 bardsley V0=7.5, M=180 E0/Gamma0 to 1e-11, E8/E9 at M=160, under 60 s", Check(bardsley_case)},
      {"5 cubic gamma=0.1, M=40 E0/Gamma0 to 1e-12, (Omega, t) branch", Check(cubic_case)},
      {"6 quartic lambda=0.02, M=35 E0 to 1e-13, Gamma0 window and extended figures", Check(quartic_case)},
      {"7 property suite", Check(properties)},
  };
  int failures = 0;
  for (const auto& [label, fn] : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes << " [error: " << e.what() << "]";
    }
    const double t = seconds_since(t0);
    std::printf("%s criterion %s (%.2f s)%s\n", o.pass ? "PASS" : "FAIL", label.c_str(), t, o.notes.str().c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures;
}
