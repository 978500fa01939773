// Presets against the published tables. Values are printed to the digits
// believed correct, so each comparison allows one unit in the last printed
// place, or the working-precision floor when that is coarser.
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "resonax/pipeline.hpp"

using namespace resonax;
using C = std::complex<double>;

namespace {

RunReport run_preset(const std::string& name, std::vector<std::size_t> M = {}) {
  RunConfig rc = load_run_config(std::string(RESONAX_PRESET_DIR) + "/" + name + ".cfg");
  if (!M.empty()) rc.M_list = std::move(M);
  return run(rc);
}

const SectorReport& sector(const RunReport& r, const std::string& label) {
  for (const auto& s : r.sectors)
    if (s.label == label) return s;
  FAIL("no sector " << label);
  throw 0;
}

const RungRecord& state(const SectorReport& s, std::size_t index, std::size_t M) {
  for (const auto& res : s.resonances)
    if (res.index == index)
      for (const auto& h : res.history)
        if (h.M == M) return h;
  FAIL("state " << index << " has no record at M=" << M);
  throw 0;
}

C param(const ParamPoint<>& p, const char* name) {
  const std::string n = name;
  return n == "L" ? *p.L : n == "t" ? *p.t : *p.omega;
}

// one unit in the last printed place
QuadDouble ulp_of(const std::string& printed) {
  const auto e = printed.find_first_of("eE");
  const std::string mant = printed.substr(0, e);
  const int exp10 = e == std::string::npos ? 0 : std::stoi(printed.substr(e + 1));
  const auto dot = mant.find('.');
  const int decimals = dot == std::string::npos ? 0 : static_cast<int>(mant.size() - dot - 1);
  return pow(QuadDouble(10.0), exp10 - decimals);
}

// value is binary64; floor is the relative working-precision limit
bool near_printed(double value, const std::string& printed, double floor = 2e-15) {
  const QuadDouble want = QuadDouble::parse(printed);
  const double tol = std::max(static_cast<double>(ulp_of(printed)), floor * std::max(1.0, std::abs(value)));
  const double err = std::abs(static_cast<double>(QuadDouble(value) - want));
  if (err > tol) MESSAGE(value << " vs " << printed << ": off by " << err << " > " << tol);
  return err <= tol;
}

bool near_printed_text(const std::string& text, const std::string& printed) {
  const QuadDouble got = QuadDouble::parse(text);
  const QuadDouble err = abs(got - QuadDouble::parse(printed));
  const QuadDouble tol = ulp_of(printed);
  if (err > tol) MESSAGE(text << " vs " << printed);
  return err <= tol;
}

bool near_param(C got, C want, double tol) {
  if (std::abs(got - want) > tol) MESSAGE(got << " vs " << want);
  return std::abs(got - want) <= tol;
}

}  // namespace

TEST_CASE("quartic lambda=0.02, double") {
  const auto r = run_preset("quartic-table1");
  const auto& s = sector(r, "even");
  const std::vector<std::pair<std::size_t, C>> omegas{
      {20, {0.723, -0.754}}, {25, {0.759, -0.853}}, {30, {0.791, -0.937}}, {35, {0.821, -1.010}}};
  for (const auto& [M, w] : omegas) CHECK(near_param(param(state(s, 0, M).params, "Omega"), w, 1e-3));
  CHECK(near_printed(state(s, 0, 20).epsilon.real(), "0.4922138348826277005"));
  CHECK(near_printed(state(s, 0, 35).epsilon.real(), "0.49221383488262770042136241897612033", 2e-16));
  CHECK(near_printed(state(s, 1, 20).epsilon.real(), "2.393167523963263"));
  CHECK(near_printed(state(s, 1, 35).epsilon.real(), "2.39316752396326281772183026343"));
  CHECK(near_printed(-2 * state(s, 1, 35).epsilon.imag(), "2.842626078391486200557e-9"));
  const double g0 = -2 * state(s, 0, 35).epsilon.imag();
  CHECK(g0 > 1e-14);
  CHECK(g0 < 1e-13);
}

TEST_CASE("quartic lambda=0.02, extended") {
  const auto r = run_preset("quartic-table1-extended");
  const auto& s = sector(r, "even");
  CHECK(r.tier == "quad-double");
  CHECK(near_printed_text(state(s, 0, 25).E_text, "0.49221383488262770042136"));
  CHECK(near_printed_text(state(s, 0, 25).Gamma_text, "5.109394888e-14"));
  CHECK(near_printed_text(state(s, 0, 30).E_text, "0.4922138348826277004213624190"));
  CHECK(near_printed_text(state(s, 0, 30).Gamma_text, "5.10939488839463e-14"));
  CHECK(near_printed_text(state(s, 0, 35).E_text, "0.49221383488262770042136241897612033"));
  CHECK(near_printed_text(state(s, 0, 35).Gamma_text, "5.109394888394627276e-14"));
  CHECK(near_printed_text(state(s, 1, 35).E_text, "2.39316752396326281772183026343"));
  CHECK(near_printed_text(state(s, 1, 35).Gamma_text, "2.842626078391486200557e-9"));
}

TEST_CASE("stretch: sextic g=0.08, extended") {
  const auto r = run_preset("sextic-table2");
  const auto& s = sector(r, "even");
  const std::vector<std::pair<std::size_t, C>> omegas{{40, {0.5161, -0.8673}}, {50, {0.5162, -1.0001}}, {60, {0.5163, -1.1171}}};
  for (const auto& [M, w] : omegas) CHECK(near_param(param(state(s, 0, M).params, "Omega"), w, 1e-4));
  CHECK(near_printed_text(state(s, 0, 40).E_text, "0.4951282297707530015692954656"));
  CHECK(near_printed_text(state(s, 0, 50).E_text, "0.4951282297707530015692954656874446"));
  CHECK(near_printed_text(state(s, 0, 50).Gamma_text, "1.2e-32"));
  CHECK(near_printed_text(state(s, 0, 60).E_text, "0.4951282297707530015692954656874446179669"));
  CHECK(near_printed_text(state(s, 0, 60).Gamma_text, "1.16994174e-32"));
  CHECK(near_printed_text(state(s, 2, 50).E_text, "4.289620313836233300694904739"));
  CHECK(near_printed_text(state(s, 2, 50).Gamma_text, "4.180046e-20"));
  CHECK(near_printed_text(state(s, 2, 60).E_text, "4.2896203138362333006949047388180616"));
  CHECK(near_printed_text(state(s, 2, 60).Gamma_text, "4.1800456118133e-20"));
}

TEST_CASE("sextic g=0.3, double") {
  const auto r = run_preset("sextic-table3");
  const auto& s = sector(r, "even");
  const std::vector<std::pair<std::size_t, C>> omegas{{10, {0.5159, -1.7799}}, {20, {0.5163, -2.5792}}, {30, {0.5163, -3.1840}}};
  for (const auto& [M, w] : omegas) CHECK(near_param(param(state(s, 0, M).params, "Omega"), w, 1e-4));
  CHECK(near_printed(state(s, 0, 10).epsilon.real(), "0.40780"));
  CHECK(near_printed(-2 * state(s, 0, 10).epsilon.imag(), "0.0294002"));
  CHECK(near_printed(state(s, 2, 10).epsilon.real(), "2.6095"));
  CHECK(near_printed(-2 * state(s, 2, 10).epsilon.imag(), "4.7968"));
  CHECK(near_printed(state(s, 0, 20).epsilon.real(), "0.4078039790737"));
  CHECK(near_printed(-2 * state(s, 0, 20).epsilon.imag(), "0.02940021689214"));
  CHECK(near_printed(state(s, 2, 20).epsilon.real(), "2.6094307234"));
  CHECK(near_printed(-2 * state(s, 2, 20).epsilon.imag(), "4.79672853029"));
  CHECK(near_printed(state(s, 0, 30).epsilon.real(), "0.40780397907366957146"));
  CHECK(near_printed(-2 * state(s, 0, 30).epsilon.imag(), "0.029400216892153485663"));
  CHECK(near_printed(state(s, 2, 30).epsilon.real(), "2.60943072337167570", 1e-13));
  CHECK(near_printed(-2 * state(s, 2, 30).epsilon.imag(), "4.79672853029023136", 1e-13));
}

TEST_CASE("cubic gamma=0.1, shifted oscillator") {
  const auto r = run_preset("cubic-table4");
  const auto& s = sector(r, "all");
  struct Row {
    std::size_t M;
    C t, omega;
  };
  for (const Row& row : {Row{20, {-0.67, -2.26}, {1.02, -0.66}}, Row{30, {-0.54, -2.78}, {1.11, -0.75}},
                         Row{40, {-0.43, -3.20}, {1.18, -0.81}}}) {
    const auto& p = state(s, 0, row.M).params;
    CHECK(near_param(param(p, "t"), row.t, 1e-2));
    CHECK(near_param(param(p, "Omega"), row.omega, 1e-2));
  }
  CHECK(near_printed(state(s, 0, 20).epsilon.real(), "0.48432"));
  CHECK(near_printed(-2 * state(s, 0, 20).epsilon.imag(), "0.0000161"));
  CHECK(near_printed(state(s, 0, 30).epsilon.real(), "0.48431599700"));
  CHECK(near_printed(-2 * state(s, 0, 30).epsilon.imag(), "0.0000161204"));
  CHECK(near_printed(state(s, 0, 40).epsilon.real(), "0.484315997004117"));
  CHECK(near_printed(-2 * state(s, 0, 40).epsilon.imag(), "0.000016120419000"));
}

TEST_CASE("gaussian-quartic lambda=0.08, trig boxes") {
  const auto r = run_preset("gauss-table5");
  const auto& ev = sector(r, "even");
  const auto& od = sector(r, "odd");
  CHECK(near_param(param(state(ev, 0, 20).params, "L"), {5.114, 2.888}, 1e-3));
  CHECK(near_param(param(od.rungs[0].params, "L"), {5.155, 2.915}, 1e-3));
  CHECK(near_param(param(state(ev, 0, 30).params, "L"), {5.840, 3.348}, 1e-3));
  CHECK(near_param(param(od.rungs[1].params, "L"), {5.872, 3.367}, 1e-3));
  CHECK(near_printed(state(ev, 0, 20).epsilon.real(), "-4.5665655093777188"));
  CHECK(near_printed(-2 * state(ev, 0, 20).epsilon.imag(), "0.0177068941054286"));
  CHECK(near_printed(state(ev, 0, 30).epsilon.real(), "-4.5665655093777188168702314"));
  CHECK(near_printed(-2 * state(ev, 0, 30).epsilon.imag(), "0.0177068941054286198302607"));

  // E_1 is the lowest odd-box resonance
  const auto lowest_odd = [&](std::size_t M) {
    const RungRecord* best = nullptr;
    for (const auto& res : od.resonances)
      for (const auto& h : res.history)
        if (h.M == M && (!best || h.epsilon.real() < best->epsilon.real())) best = &h;
    REQUIRE(best != nullptr);
    return best->epsilon;
  };
  CHECK(near_printed(lowest_odd(20).real(), "-3.8381035089108826"));
  CHECK(near_printed(-2 * lowest_odd(20).imag(), "0.2743215904678811"));
  CHECK(near_printed(lowest_odd(30).real(), "-3.8381035089108826586063027"));
  CHECK(near_printed(-2 * lowest_odd(30).imag(), "0.27432159046788112432336"));
}

TEST_CASE("gaussian-quartic lambda=0.01, trig boxes") {
  const auto r = run_preset("gauss-table5a");
  const auto& ev = sector(r, "even");
  const auto& od = sector(r, "odd");
  CHECK(near_param(param(ev.rungs[0].params, "L"), {7.202, 4.098}, 1e-3));
  CHECK(near_param(param(od.rungs[0].params, "L"), {7.264, 4.135}, 1e-3));
  CHECK(near_param(param(ev.rungs[1].params, "L"), {8.261, 4.726}, 1e-3));
  CHECK(near_param(param(od.rungs[1].params, "L"), {8.306, 4.753}, 1e-3));
  CHECK(near_printed(state(ev, 0, 20).epsilon.real(), "-4.52348287219"));
  CHECK(near_printed(-2 * state(ev, 0, 20).epsilon.imag(), "2.20682e-7"));
  CHECK(near_printed(state(ev, 0, 30).epsilon.real(), "-4.5234828721860057186"));
  CHECK(near_printed(-2 * state(ev, 0, 30).epsilon.imag(), "2.20682214291e-7"));
  CHECK(near_printed(state(od, 0, 20).epsilon.real(), "-3.62331693435"));
  CHECK(near_printed(-2 * state(od, 0, 20).epsilon.imag(), "0.00006769098"));
  CHECK(near_printed(state(od, 0, 30).epsilon.real(), "-3.6233169343531338"));
  CHECK(near_printed(-2 * state(od, 0, 30).epsilon.imag(), "0.0000676909876076569"));
}

TEST_CASE("mexican hat g=0.1, D=2") {
  const auto r = run_preset("mexican-table6");
  const auto& l0 = sector(r, "l=0");
  const auto& l1 = sector(r, "l=1");
  CHECK(near_param(param(state(l0, 0, 10).params, "Omega"), {0.8982, -1.1917}, 1e-4));
  CHECK(near_param(param(state(l1, 0, 10).params, "Omega"), {0.9095, -1.2172}, 1e-4));
  CHECK(near_param(param(state(l0, 0, 15).params, "Omega"), {1.0000, -1.4142}, 1e-4));
  CHECK(near_param(param(state(l1, 0, 15).params, "Omega"), {1.0090, -1.4333}, 1e-4));
  CHECK(near_param(param(state(l0, 0, 20).params, "Omega"), {1.0832, -1.5874}, 1e-4));
  CHECK(near_param(param(state(l1, 0, 20).params, "Omega"), {1.0907, -1.6029}, 1e-4));
  CHECK(near_printed(state(l0, 0, 10).epsilon.real(), "0.856745041"));
  CHECK(near_printed(-2 * state(l0, 0, 10).epsilon.imag(), "0.04543667"));
  CHECK(near_printed(state(l1, 0, 10).epsilon.real(), "1.56818293"));
  CHECK(near_printed(-2 * state(l1, 0, 10).epsilon.imag(), "0.34682442"));
  CHECK(near_printed(state(l0, 0, 15).epsilon.real(), "0.85674504114583"));
  CHECK(near_printed(-2 * state(l0, 0, 15).epsilon.imag(), "0.0454366707026"));
  CHECK(near_printed(state(l1, 0, 15).epsilon.real(), "1.568182929694"));
  CHECK(near_printed(-2 * state(l1, 0, 15).epsilon.imag(), "0.34682442355763"));
  CHECK(near_printed(state(l0, 0, 20).epsilon.real(), "0.8567450411458273172"));
  CHECK(near_printed(-2 * state(l0, 0, 20).epsilon.imag(), "0.0454366707025907851"));
  CHECK(near_printed(state(l1, 0, 20).epsilon.real(), "1.5681829296936992519"));
  CHECK(near_printed(-2 * state(l1, 0, 20).epsilon.imag(), "0.346824423557637908916"));
}

TEST_CASE("bardsley V0=7.5, first two rungs") {
  // the full ladder to M=180 runs in the acceptance binary
  const auto r = run_preset("bardsley-table7", {100, 120});
  const auto& s = sector(r, "radial");
  CHECK(near_param(param(s.rungs[0].params, "L"), {-0.841, 6.661}, 1e-3));
  CHECK(near_param(param(s.rungs[1].params, "L"), {-1.099, 6.804}, 1e-3));
  const auto& e0 = state(s, 0, 120);
  CHECK(near_printed_text(e0.E_text, "3.4263903"));
  CHECK(near_printed_text(e0.Gamma_text, "0.02554896"));
  const auto& e0_100 = state(s, 0, 100);
  CHECK(near_printed(e0_100.epsilon.real(), "3.4264"));
  CHECK(near_printed(-2 * e0_100.epsilon.imag(), "0.025549"));
}
