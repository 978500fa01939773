#include "resonax/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "resonax/errors.hpp"

namespace resonax {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::vector<std::string> split_list(const std::string& raw, const std::string& key) {
  const std::string v = trim(raw);
  if (v.size() < 2 || v.front() != '[' || v.back() != ']') return {v};
  std::vector<std::string> items;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const char ch = v[i];
    if (ch == '"') quoted = !quoted;
    if (ch == ',' && !quoted) {
      items.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (quoted) throw ConfigError("unterminated string in " + key);
  if (!trim(cur).empty() || !items.empty()) items.push_back(trim(cur));
  for (const auto& it : items)
    if (it.empty()) throw ConfigError("empty list element in " + key);
  return items;
}

std::string unquote(const std::string& raw, const std::string& key) {
  const std::string v = trim(raw);
  if (v.size() >= 2 && v.front() == '"') {
    if (v.back() != '"') throw ConfigError("unterminated string in " + key);
    return v.substr(1, v.size() - 2);
  }
  return v;
}

double to_number(const std::string& raw, const std::string& key) {
  const std::string v = trim(raw);
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    throw ConfigError("not a number for " + key + ": " + v);
  }
  if (used != v.size()) throw ConfigError("not a number for " + key + ": " + v);
  return x;
}

}  // namespace

Config Config::parse(const std::string& text, const std::string& origin) {
  Config cfg;
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key or value");
    if (std::count(value.begin(), value.end(), '"') % 2 != 0)
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": unterminated string");
    if (cfg.values_.count(key)) throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key " + key);
    cfg.values_[key] = value;
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), path);
}

std::string Config::get_string(const std::string& key, const std::optional<std::string>& fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) {
    if (fallback) return *fallback;
    throw ConfigError(origin_ + ": missing key " + key);
  }
  return unquote(it->second, key);
}

double Config::get_number(const std::string& key, const std::optional<double>& fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) {
    if (fallback) return *fallback;
    throw ConfigError(origin_ + ": missing key " + key);
  }
  return to_number(it->second, key);
}

std::vector<double> Config::get_numbers(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError(origin_ + ": missing key " + key);
  std::vector<double> out;
  for (const auto& s : split_list(it->second, key)) out.push_back(to_number(s, key));
  return out;
}

std::vector<std::string> Config::get_strings(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError(origin_ + ": missing key " + key);
  std::vector<std::string> out;
  for (const auto& s : split_list(it->second, key)) out.push_back(unquote(s, key));
  return out;
}

std::vector<std::string> Config::keys() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : values_) out.push_back(k);
  return out;
}

namespace {

const std::vector<std::string> kKnownKeys = {
    "name",           "description",       "problem.potential", "problem.lambda",     "problem.g",
    "problem.gamma",  "problem.v0",        "problem.depth",     "problem.beta",       "problem.coefficients",
    "problem.D",      "problem.l",         "basis.family",      "basis.sector",       "ladder.M",
    "ladder.start",   "ladder.stop",       "ladder.step",       "ladder.tol",         "ladder.window",
    "precision",      "precision.digits",  "optimizer.grid_n",  "optimizer.re",       "optimizer.im",
    "optimizer.seed", "optimizer.newton_tol", "output.format",  "output.path",        "figure.x_min",
    "figure.x_max",   "figure.samples",    "figure.states"};

std::size_t to_count(double x, const std::string& key) {
  if (!(x >= 0.0) || x != std::floor(x)) throw ConfigError(key + " must be a non-negative integer");
  return static_cast<std::size_t>(x);
}

}  // namespace

namespace {

// Numeric check in binary64, value parsed from the text at quad-double precision.
QuadDouble exact_number(const Config& c, const std::string& key) {
  (void)c.get_number(key);
  return QuadDouble::parse(c.get_string(key));
}

}  // namespace

RunConfig make_run_config(const Config& c) {
  for (const auto& k : c.keys())
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), k) == kKnownKeys.end())
      throw ConfigError("unknown config key " + k);

  RunConfig rc;
  rc.name = c.get_string("name", std::string("run"));
  rc.potential = c.get_string("problem.potential");
  for (const char* k : {"lambda", "g", "gamma", "v0", "depth", "beta"}) {
    const std::string key = std::string("problem.") + k;
    if (c.has(key)) rc.couplings[k] = exact_number(c, key);
  }
  if (c.has("problem.coefficients")) {
    (void)c.get_numbers("problem.coefficients");
    for (const auto& text : c.get_strings("problem.coefficients")) rc.coefficients.push_back(QuadDouble::parse(text));
  }
  rc.family = c.get_string("basis.family", std::string("ho"));
  if (c.has("basis.sector")) rc.sectors = c.get_strings("basis.sector");
  if (c.has("problem.D")) rc.D = static_cast<int>(to_count(c.get_number("problem.D"), "problem.D"));
  if (c.has("problem.l"))
    for (double l : c.get_numbers("problem.l")) rc.l_values.push_back(static_cast<int>(to_count(l, "problem.l")));

  if (c.has("ladder.M")) {
    for (double m : c.get_numbers("ladder.M")) rc.M_list.push_back(to_count(m, "ladder.M"));
  } else if (c.has("ladder.start")) {
    const auto a = to_count(c.get_number("ladder.start"), "ladder.start");
    const auto b = to_count(c.get_number("ladder.stop"), "ladder.stop");
    const auto s = to_count(c.get_number("ladder.step"), "ladder.step");
    if (s == 0) throw ConfigError("ladder.step must be positive");
    for (auto m = a; m <= b; m += s) rc.M_list.push_back(m);
  }
  rc.tol = c.get_number("ladder.tol", 1e-8);
  rc.window = c.get_number("ladder.window", 0.5);

  const std::string prec = c.get_string("precision", std::string("double"));
  if (prec == "double") {
    rc.tier = PrecisionTier::binary64;
    rc.digits = 16;
  } else if (prec == "extended") {
    rc.digits = static_cast<int>(to_count(c.get_number("precision.digits"), "precision.digits"));
    if (rc.digits < 16) throw ConfigError("precision.digits must be at least 16");
    rc.tier = tier_for_digits(rc.digits);
  } else if (prec == "double_double") {
    rc.tier = PrecisionTier::double_double;
    rc.digits = 31;
  } else {
    throw ConfigError("precision must be double, double_double or extended, got " + prec);
  }

  if (c.has("optimizer.grid_n")) rc.optimizer.grid_n = to_count(c.get_number("optimizer.grid_n"), "optimizer.grid_n");
  if (c.has("optimizer.re")) {
    const auto v = c.get_numbers("optimizer.re");
    if (v.size() != 2) throw ConfigError("optimizer.re takes [min, max]");
    rc.optimizer.grid_re_min = v[0];
    rc.optimizer.grid_re_max = v[1];
  }
  if (c.has("optimizer.im")) {
    const auto v = c.get_numbers("optimizer.im");
    if (v.size() != 2) throw ConfigError("optimizer.im takes [min, max]");
    rc.optimizer.grid_im_min = v[0];
    rc.optimizer.grid_im_max = v[1];
  }
  if (c.has("optimizer.newton_tol")) rc.optimizer.newton_tol = c.get_number("optimizer.newton_tol");
  if (c.has("optimizer.seed")) {
    const auto v = c.get_numbers("optimizer.seed");
    if (v.empty() || v.size() % 2 != 0) throw ConfigError("optimizer.seed takes [re, im, ...] pairs");
    std::vector<std::complex<double>> seed;
    for (std::size_t i = 0; i < v.size(); i += 2) seed.emplace_back(v[i], v[i + 1]);
    rc.optimizer.seed = seed;
  }

  rc.format = c.get_string("output.format", std::string("csv"));
  rc.out = c.get_string("output.path", std::string());
  rc.figure.x_min = c.get_number("figure.x_min", 0.0);
  rc.figure.x_max = c.get_number("figure.x_max", 0.0);
  rc.figure.samples = to_count(c.get_number("figure.samples", 401.0), "figure.samples");
  rc.figure.max_states = to_count(c.get_number("figure.states", 0.0), "figure.states");
  rc.validate();
  (void)rc.jobs();  // surfaces missing couplings and bad sector/family pairs at load time
  return rc;
}

RunConfig load_run_config(const std::string& path) { return make_run_config(Config::load(path)); }

void RunConfig::validate() const {
  if (M_list.empty()) throw ConfigError("ladder.M is empty");
  for (std::size_t i = 0; i < M_list.size(); ++i) {
    if (M_list[i] == 0) throw ConfigError("ladder.M entries must be positive");
    if (i > 0 && M_list[i] <= M_list[i - 1]) throw ConfigError("ladder.M must be strictly increasing");
  }
  if (tier != PrecisionTier::binary64 && digits < 16) throw ConfigError("extended precision needs digits >= 16");
  if (format != "csv" && format != "json") throw ConfigError("output.format must be csv or json");
  if (!(tol > 0.0) || !(window > 0.0)) throw ConfigError("ladder.tol and ladder.window must be positive");
  if (sectors.empty()) throw ConfigError("basis.sector is empty");
}

namespace {

QuadDouble coupling(const RunConfig& rc, const std::string& k, std::optional<double> fallback = {}) {
  auto it = rc.couplings.find(k);
  if (it != rc.couplings.end()) return it->second;
  if (fallback) return *fallback;
  throw ConfigError("potential " + rc.potential + " needs problem." + k);
}

}  // namespace

PotentialSpec RunConfig::base_potential() const {
  if (potential == "harmonic") return harmonic();
  if (potential == "quartic") return quartic(coupling(*this, "lambda"));
  if (potential == "triple_well") return triple_well(coupling(*this, "g"));
  if (potential == "cubic") return cubic(coupling(*this, "gamma"));
  if (potential == "gaussian_quartic")
    return gaussian_quartic(coupling(*this, "lambda"), coupling(*this, "depth", 5.0), coupling(*this, "beta", 0.1));
  if (potential == "bardsley") return bardsley(coupling(*this, "v0"));
  if (potential == "mexican_hat") return mexican_hat(coupling(*this, "g"), AngularSector{});
  if (potential == "polynomial") {
    if (coefficients.empty()) throw ConfigError("polynomial potential needs problem.coefficients");
    std::vector<PotentialTerm> terms;
    for (std::size_t k = 0; k < coefficients.size(); ++k)
      if (coefficients[k] != QuadDouble(0.0)) terms.push_back(PotentialTerm::monomial(coefficients[k], static_cast<int>(k)));
    const bool radial = family == "radial_ho" || family == "radial_trig";
    return make_potential("polynomial", terms, radial ? Domain::half_line : Domain::full_line);
  }
  throw ConfigError("unknown potential " + potential);
}

std::vector<SectorJob> RunConfig::jobs() const {
  std::vector<SectorJob> out;
  std::vector<std::string> secs;
  for (const auto& s : sectors) {
    if (s == "both") {
      secs.push_back("even");
      secs.push_back("odd");
    } else {
      secs.push_back(s);
    }
  }
  if (family == "radial_ho") {
    if (D < 1) throw ConfigError("radial_ho needs problem.D");
    if (l_values.empty()) throw ConfigError("radial_ho needs problem.l");
    for (int l : l_values) {
      const AngularSector sec = reduce_radial(l, D);
      PotentialSpec pot;
      if (potential == "mexican_hat") {
        pot = mexican_hat(coupling(*this, "g"), sec);
      } else {
        pot = base_potential();
        if (sec.centrifugal_strength() != 0.0) {
          pot.terms.push_back(PotentialTerm::centrifugal(sec.centrifugal_strength()));
          pot = make_potential(pot.name, pot.terms, Domain::half_line);
        }
      }
      out.push_back({"l=" + std::to_string(l), make_basis(BasisKind::radial_ho, Sector::radial, sec.Lambda), pot});
    }
    return out;
  }
  const PotentialSpec pot = base_potential();
  for (const auto& s : secs) {
    BasisSpec basis;
    if (family == "ho") {
      basis = make_basis(BasisKind::ho, parse_sector(s));
    } else if (family == "shifted_ho") {
      basis = make_basis(BasisKind::shifted_ho, parse_sector(s));
    } else if (family == "trig") {
      const Sector sec = parse_sector(s);
      if (sec == Sector::even) basis = make_basis(BasisKind::trig_even, sec);
      else if (sec == Sector::odd) basis = make_basis(BasisKind::trig_odd, sec);
      else throw ConfigError("trig basis needs sector even or odd");
    } else if (family == "radial_trig") {
      basis = make_basis(BasisKind::radial_trig, Sector::radial);
    } else {
      throw ConfigError("unknown basis.family " + family);
    }
    out.push_back({basis.radial() ? std::string("radial") : s, basis, pot});
    if (basis.radial()) break;
  }
  return out;
}

}  // namespace resonax
