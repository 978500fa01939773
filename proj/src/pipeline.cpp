#include "resonax/pipeline.hpp"

#include <algorithm>
#include <chrono>

#include "resonax/eigensolver.hpp"
#include "resonax/errors.hpp"

namespace resonax {

namespace {

std::optional<ParamPoint<double>> seed_point(const SectorJob& job, const RunConfig& cfg) {
  if (!cfg.optimizer.seed) return std::nullopt;
  if (cfg.optimizer.seed->size() != job.basis.param_names().size())
    throw ConfigError("optimizer.seed has the wrong number of parameters for sector " + job.label);
  return job.basis.unpack(*cfg.optimizer.seed);
}

// Root search and selection in binary64; the chosen root alone is then
// refined in the working precision by the caller.
ParamPoint<double> choose_root(const TraceFunction<double>& tf, const OptimizerOptions& opt,
                               const std::optional<ParamPoint<double>>& history) {
  if (tf.basis().kind() == BasisKind::shifted_ho) return optimize_shifted(tf, opt, history);
  return select_root(stationary_points(tf, opt), tf.basis(), history);
}

// binary64 tier: QR on the rounded matrix, then inverse iteration plus a
// Rayleigh quotient against the double-double matrix. Near-defective
// resonances amplify assembly rounding by ~1e3 (cubic at M=40), and narrow
// widths sit below one ulp of E, so both need the unrounded matrix.
void polish_spectrum(EigenSet& set, const Matrix<std::complex<double>>& h,
                     const Matrix<std::complex<DoubleDouble>>& exact) {
  for (auto& z : set.eigenvalues) z = polish_symmetric_eigenvalue(h, z, 2, &exact);
  std::sort(set.eigenvalues.begin(), set.eigenvalues.end(), [](auto a, auto b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
}

template <class R>
SectorReport run_sector(const SectorJob& job, const RunConfig& cfg) {
  SectorReport rep;
  rep.label = job.label;
  rep.param_names = job.basis.param_names();
  std::optional<ParamPoint<double>> history = seed_point(job, cfg);
  std::vector<EigenSet> ladder;
  for (std::size_t M : cfg.M_list) {
    try {
      const TraceFunction<R> tf(job.basis, job.potential, M);
      const ParamPoint<double> root =
          choose_root(TraceFunction<double>(job.basis, job.potential, M), cfg.optimizer, history);
      const ParamPoint<R> p = polish_root<R>(tf, root);
      EigenSet set;
      if constexpr (std::is_same_v<R, double>) {
        const auto hd = build_matrix<DoubleDouble>(job.basis, job.potential, p.template convert<DoubleDouble>(), M);
        RRMatrix<double> h{M, hd.entries.template map<std::complex<double>>([](const auto& z) { return to_double(z); }),
                           p, hd.sector};
        set = eigenvalues<double>(h);
        polish_spectrum(set, h.entries, hd.entries);
      } else {
        set = eigenvalues<R>(build_matrix<R>(job.basis, job.potential, p, M));
      }
      history = set.params;
      rep.rungs.push_back({M, set.params, set});
      ladder.push_back(std::move(set));
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("sector " + job.label + ", M=" + std::to_string(M) + ": " + e.what(), e.index());
    } catch (const Error& e) {
      throw Error("sector " + job.label + ", M=" + std::to_string(M) + ": " + e.what());
    }
  }
  rep.resonances = resonances(ladder, cfg.tol, cfg.window, job.label);
  return rep;
}

template <class R>
std::vector<RootAudit> audit(const RunConfig& cfg) {
  std::vector<RootAudit> out;
  OptimizerOptions opt = cfg.optimizer;
  opt.keep_invalid = true;
  for (const auto& job : cfg.jobs()) {
    std::optional<ParamPoint<double>> history = seed_point(job, cfg);
    for (std::size_t M : cfg.M_list) {
      const TraceFunction<R> tf(job.basis, job.potential, M);
      RootAudit a;
      a.label = job.label;
      a.M = M;
      a.candidates = stationary_points(tf, opt);
      a.selected = choose_root(TraceFunction<double>(job.basis, job.potential, M), cfg.optimizer, history);
      history = a.selected;
      out.push_back(std::move(a));
    }
  }
  return out;
}

}  // namespace

RunReport run(const RunConfig& config) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  report.name = config.name;
  report.tier = tier_name(config.tier);
  report.digits = tier_digits(config.tier);
  for (const auto& job : config.jobs()) {
    switch (config.tier) {
      case PrecisionTier::binary64: report.sectors.push_back(run_sector<double>(job, config)); break;
      case PrecisionTier::double_double: report.sectors.push_back(run_sector<DoubleDouble>(job, config)); break;
      case PrecisionTier::quad_double: report.sectors.push_back(run_sector<QuadDouble>(job, config)); break;
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::vector<RootAudit> trace_roots(const RunConfig& config) {
  config.validate();
  switch (config.tier) {
    case PrecisionTier::double_double: return audit<DoubleDouble>(config);
    case PrecisionTier::quad_double: return audit<QuadDouble>(config);
    default: return audit<double>(config);
  }
}

}  // namespace resonax
