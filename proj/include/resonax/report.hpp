#pragma once

#include <ostream>
#include <string>

#include "json.hpp"
#include "resonax/config.hpp"
#include "resonax/pipeline.hpp"

namespace resonax {

// CSV columns: M, each parameter's Re and Im, state, E, Gamma,
// converged_digits. One row per (rung, stabilized state); the state column
// carries a "sector:" prefix when the run has more than one sector.
void write_csv(const RunReport& report, std::ostream& out);

// All eigenvalues of every rung, same column layout (for single-rung runs).
void write_spectrum_csv(const RunReport& report, std::ostream& out);

nlohmann::json to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);

// Writes csv or json to `path` ("-" or empty: stdout). Throws Error on I/O failure.
void emit_table(const RunReport& report, const std::string& format, const std::string& path);

// Potential samples plus one horizontal segment per resonance at Re(eps),
// spanning the classically allowed region around the well it sits in.
nlohmann::json figure_data(const RunConfig& config, const RunReport& report);
void emit_figure_data(const RunConfig& config, const RunReport& report, const std::string& path);

}  // namespace resonax
