#pragma once

#include <string>
#include <vector>

#include "resonax/config.hpp"
#include "resonax/optimizer.hpp"
#include "resonax/spectrum.hpp"

namespace resonax {

struct RungOutcome {
  std::size_t M = 0;
  ParamPoint<double> params;
  EigenSet spectrum;
};

struct SectorReport {
  std::string label;
  std::vector<std::string> param_names;
  std::vector<RungOutcome> rungs;
  std::vector<ResonanceResult> resonances;
};

struct RunReport {
  std::string name;
  std::string tier;
  int digits = 16;
  std::vector<SectorReport> sectors;
  double seconds = 0.0;  // wall time; not part of the emitted files
};

// For every sector and every M: stationary trace root, matrix at the root,
// full spectrum; then stabilization across the ladder.
RunReport run(const RunConfig& config);

struct RootAudit {
  std::string label;
  std::size_t M = 0;
  std::vector<RootCandidate> candidates;
  ParamPoint<double> selected;
};

// Every stationary candidate of every rung, plus the one run() would take.
std::vector<RootAudit> trace_roots(const RunConfig& config);

}  // namespace resonax
