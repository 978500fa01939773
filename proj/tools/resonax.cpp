// resonax: batch driver for optimized Rayleigh-Ritz resonance ladders.
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "resonax/errors.hpp"
#include "resonax/matelem.hpp"
#include "resonax/oracle.hpp"
#include "resonax/pipeline.hpp"
#include "resonax/report.hpp"

#ifndef RESONAX_PRESET_DIR
#define RESONAX_PRESET_DIR "presets"
#endif

namespace fs = std::filesystem;
using namespace resonax;

namespace {

struct Common {
  std::string config;
  std::string format;
  std::string out;
  std::string figure;
  std::string preset_dir = RESONAX_PRESET_DIR;
  bool timing = false;
};

RunConfig load(const Common& c) {
  RunConfig rc = load_run_config(c.config);
  if (!c.format.empty()) rc.format = c.format;
  if (!c.out.empty()) rc.out = c.out;
  rc.validate();
  return rc;
}

void finish(const RunConfig& rc, const RunReport& report, const Common& c) {
  emit_table(report, rc.format, rc.out);
  if (!c.figure.empty()) emit_figure_data(rc, report, c.figure);
  if (c.timing) std::cerr << report.name << ": " << report.seconds << " s\n";
}

int cmd_ladder(const Common& c) {
  const RunConfig rc = load(c);
  finish(rc, run(rc), c);
  return 0;
}

int cmd_solve(const Common& c, std::size_t M) {
  RunConfig rc = load(c);
  if (M != 0) rc.M_list = {M};
  else rc.M_list = {rc.M_list.back()};
  const RunReport report = run(rc);
  std::ostringstream ss;
  if (rc.format == "json") {
    ss << to_json(report).dump(1) << "\n";
  } else {
    write_spectrum_csv(report, ss);
  }
  if (rc.out.empty() || rc.out == "-") {
    std::cout << ss.str();
  } else {
    std::ofstream f(rc.out);
    if (!(f << ss.str())) throw Error("cannot write " + rc.out);
  }
  return 0;
}

int cmd_trace_roots(const Common& c) {
  const RunConfig rc = load(c);
  std::cout << "sector,M,candidate,params,residual,valid,selected\n";
  for (const auto& a : trace_roots(rc)) {
    for (std::size_t i = 0; i < a.candidates.size(); ++i) {
      const auto& cand = a.candidates[i];
      std::string ps;
      bool same = true;
      auto add = [&](const char* n, const std::optional<std::complex<double>>& z,
                     const std::optional<std::complex<double>>& sel) {
        if (!z) return;
        ps += std::string(ps.empty() ? "" : " ") + n + "=" + format_double(z->real()) + (z->imag() < 0 ? "" : "+") +
              format_double(z->imag()) + "i";
        if (!sel || std::abs(*z - *sel) > 1e-8 * std::max(1.0, std::abs(*z))) same = false;
      };
      add("Omega", cand.params.omega, a.selected.omega);
      add("t", cand.params.t, a.selected.t);
      add("L", cand.params.L, a.selected.L);
      std::cout << a.label << "," << a.M << "," << i << "," << ps << "," << format_double(cand.residual) << ","
                << (cand.valid ? "yes" : "no") << "," << (same ? "*" : "") << "\n";
    }
  }
  return 0;
}

// Matrix elements against brute-force quadrature at the first rung's root.
int cmd_oracle_check(const Common& c, std::size_t size) {
  const RunConfig rc = load(c);
  bool ok = true;
  for (const auto& job : rc.jobs()) {
    const std::size_t M = std::min(size, rc.M_list.front());
    const TraceFunction<double> tf(job.basis, job.potential, rc.M_list.front());
    std::optional<ParamPoint<double>> seed;
    if (rc.optimizer.seed) seed = job.basis.unpack(*rc.optimizer.seed);
    const ParamPoint<double> p = job.basis.kind() == BasisKind::shifted_ho
                                     ? optimize_shifted(tf, rc.optimizer, seed)
                                     : select_root(stationary_points(tf, rc.optimizer), job.basis, seed);
    const auto h = build_matrix<double>(job.basis, job.potential, p, M);
    double scale = 0.0, worst = 0.0;
    for (std::size_t i = 0; i < M; ++i)
      for (std::size_t j = 0; j < M; ++j) scale = std::max(scale, std::abs(h.entries(i, j)));
    for (std::size_t i = 0; i < M; ++i)
      for (std::size_t j = i; j < M; ++j) {
        const auto q = quadrature_element(job.basis, job.potential, p, i, j, 800);
        worst = std::max(worst, std::abs(q - h.entries(i, j)) / scale);
      }
    const bool pass = worst < 1e-11;
    ok = ok && pass;
    std::cout << job.label << ": max relative deviation " << worst << " over " << M << "x" << M << " "
              << (pass ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resonance energies by the optimized Rayleigh-Ritz method"};
  app.require_subcommand(1);
  Common c;
  std::size_t solve_M = 0, oracle_size = 12;
  std::string preset;

  auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* opt = sub->add_option("--config", c.config, "config file");
    if (needs_config) opt->required()->check(CLI::ExistingFile);
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", c.out, "output path (default stdout)");
    sub->add_flag("--timing", c.timing, "print wall time to stderr");
  };
  auto* solve = app.add_subcommand("solve", "one rung: all eigenvalues at the stationary point");
  add_common(solve, true);
  solve->add_option("--M", solve_M, "basis size (default: last ladder entry)");
  auto* ladder = app.add_subcommand("ladder", "run the M ladder and report stabilized resonances");
  add_common(ladder, true);
  ladder->add_option("--figure", c.figure, "also write figure data (json)");
  auto* roots = app.add_subcommand("trace-roots", "list every stationary point of the trace");
  add_common(roots, true);
  auto* oracle = app.add_subcommand("oracle-check", "compare matrix elements with quadrature");
  add_common(oracle, true);
  oracle->add_option("--size", oracle_size, "leading block to check");
  auto* pre = app.add_subcommand("preset", "run a shipped preset ladder");
  add_common(pre, false);
  pre->add_option("name", preset, "preset name")->required();
  pre->add_option("--preset-dir", c.preset_dir, "preset directory");
  pre->add_option("--figure", c.figure, "also write figure data (json)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*solve) return cmd_solve(c, solve_M);
    if (*ladder) return cmd_ladder(c);
    if (*roots) return cmd_trace_roots(c);
    if (*oracle) return cmd_oracle_check(c, oracle_size);
    if (*pre) {
      c.config = (fs::path(c.preset_dir) / (preset + ".cfg")).string();
      if (!fs::exists(c.config)) throw ConfigError("no preset " + preset + " in " + c.preset_dir);
      return cmd_ladder(c);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
