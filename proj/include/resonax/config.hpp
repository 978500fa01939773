#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resonax/basis.hpp"
#include "resonax/numeric.hpp"
#include "resonax/optimizer.hpp"
#include "resonax/potentials.hpp"

namespace resonax {

// Flat `dotted.key = value` text. Values are numbers, "strings", or
// [comma, separated, lists]; `#` starts a comment.
class Config {
 public:
  static Config parse(const std::string& text, const std::string& origin = "<config>");
  static Config load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::string get_string(const std::string& key, const std::optional<std::string>& fallback = {}) const;
  double get_number(const std::string& key, const std::optional<double>& fallback = {}) const;
  std::vector<double> get_numbers(const std::string& key) const;
  std::vector<std::string> get_strings(const std::string& key) const;
  std::vector<std::string> keys() const;
  void set(const std::string& key, const std::string& raw) { values_[key] = raw; }

 private:
  std::map<std::string, std::string> values_;  // raw value text
  std::string origin_;
};

// One independent ladder: a basis sector paired with its potential.
struct SectorJob {
  std::string label;  // even, odd, all, l=0, ...
  BasisSpec basis;
  PotentialSpec potential;
};

struct FigureOptions {
  double x_min = 0.0, x_max = 0.0;  // 0,0 = automatic
  std::size_t samples = 401;
  std::size_t max_states = 0;  // 0 = all
};

struct RunConfig {
  std::string name;
  std::string potential = "harmonic";
  // lambda, g, gamma, v0, depth, beta; kept from the decimal text beyond binary64
  std::map<std::string, QuadDouble> couplings;
  std::vector<QuadDouble> coefficients;  // polynomial: c_k multiplies x^k
  std::string family = "ho";
  std::vector<std::string> sectors{"all"};
  int D = 0;
  std::vector<int> l_values;
  std::vector<std::size_t> M_list;
  PrecisionTier tier = PrecisionTier::binary64;
  int digits = 16;
  OptimizerOptions optimizer;
  double tol = 1e-8;
  double window = 0.5;
  std::string format = "csv";
  std::string out;
  FigureOptions figure;

  void validate() const;
  // Expands sectors and l values into independent ladders.
  std::vector<SectorJob> jobs() const;
  PotentialSpec base_potential() const;  // without any centrifugal term
};

RunConfig make_run_config(const Config& config);
RunConfig load_run_config(const std::string& path);

}  // namespace resonax
