#include "resonax/report.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "resonax/errors.hpp"

namespace resonax {

using nlohmann::json;

namespace {

std::vector<std::complex<double>> packed(const SectorReport& s, const ParamPoint<double>& p) {
  std::vector<std::complex<double>> out;
  for (const auto& n : s.param_names) {
    const auto& z = n == "Omega" ? p.omega : n == "t" ? p.t : p.L;
    out.push_back(z.value_or(std::complex<double>{}));
  }
  return out;
}

ParamPoint<double> unpacked(const std::vector<std::string>& names, const json& j) {
  ParamPoint<double> p;
  for (const auto& n : names) {
    const std::complex<double> z{j.at(n).at(0).get<double>(), j.at(n).at(1).get<double>()};
    if (n == "Omega") p.omega = z;
    else if (n == "t") p.t = z;
    else p.L = z;
  }
  return p;
}

std::string header(const RunReport& r) {
  std::string h = "M";
  if (!r.sectors.empty())
    for (const auto& n : r.sectors.front().param_names) h += "," + n + "_re," + n + "_im";
  return h + ",state,E,Gamma,converged_digits\n";
}

std::string params_cols(const SectorReport& s, const ParamPoint<double>& p) {
  std::string out;
  for (const auto& z : packed(s, p)) out += "," + format_double(z.real()) + "," + format_double(z.imag());
  return out;
}

std::string state_col(const RunReport& r, const SectorReport& s, std::size_t n) {
  return r.sectors.size() > 1 ? s.label + ":" + std::to_string(n) : std::to_string(n);
}

// Round-trip text: the working-precision string when there is one.
std::string energy_text(double x, const std::string& text) { return text.empty() ? format_double(x) : text; }

}  // namespace

void write_csv(const RunReport& r, std::ostream& out) {
  out << header(r);
  for (const auto& s : r.sectors) {
    for (std::size_t k = 0; k < s.rungs.size(); ++k) {
      for (const auto& res : s.resonances) {
        // history is oldest first and ends at the last rung
        const std::size_t offset = s.rungs.size() - res.history.size();
        if (k < offset) continue;
        const auto& h = res.history[k - offset];
        const std::string E = energy_text(h.epsilon.real(), h.E_text);
        const std::string G = energy_text(-2.0 * h.epsilon.imag(), h.Gamma_text);
        const std::string digits = h.converged_digits < 0.0 ? std::string() : format_double(h.converged_digits);
        out << h.M << params_cols(s, h.params) << "," << state_col(r, s, res.index) << "," << E << "," << G << ","
            << digits << "\n";
      }
    }
  }
}

void write_spectrum_csv(const RunReport& r, std::ostream& out) {
  out << header(r);
  for (const auto& s : r.sectors)
    for (const auto& rung : s.rungs)
      for (std::size_t i = 0; i < rung.spectrum.eigenvalues.size(); ++i) {
        const auto z = rung.spectrum.eigenvalues[i];
        const bool text = !rung.spectrum.text.empty();
        out << rung.M << params_cols(s, rung.params) << "," << state_col(r, s, i) << ","
            << (text ? rung.spectrum.text[i].first : format_double(z.real())) << ","
            << format_double(-2.0 * z.imag()) << ",\n";
      }
}

json to_json(const RunReport& r) {
  json j;
  j["name"] = r.name;
  j["tier"] = r.tier;
  j["digits"] = r.digits;
  j["sectors"] = json::array();
  auto pj = [](const SectorReport& s, const ParamPoint<double>& p) {
    json o = json::object();
    const auto v = packed(s, p);
    for (std::size_t i = 0; i < v.size(); ++i) o[s.param_names[i]] = {v[i].real(), v[i].imag()};
    return o;
  };
  for (const auto& s : r.sectors) {
    json sj;
    sj["label"] = s.label;
    sj["param_names"] = s.param_names;
    sj["rungs"] = json::array();
    for (const auto& rung : s.rungs) {
      json rj;
      rj["M"] = rung.M;
      rj["params"] = pj(s, rung.params);
      rj["digits"] = rung.spectrum.digits;
      rj["eigenvalues"] = json::array();
      for (const auto& z : rung.spectrum.eigenvalues) rj["eigenvalues"].push_back({z.real(), z.imag()});
      if (!rung.spectrum.text.empty()) {
        rj["eigenvalues_text"] = json::array();
        for (const auto& [re, im] : rung.spectrum.text) rj["eigenvalues_text"].push_back({re, im});
      }
      sj["rungs"].push_back(rj);
    }
    sj["resonances"] = json::array();
    for (const auto& res : s.resonances) {
      json q;
      q["index"] = res.index;
      q["E"] = res.E;
      q["Gamma"] = res.Gamma;
      q["E_text"] = res.E_text;
      q["Gamma_text"] = res.Gamma_text;
      q["converged_digits"] = res.converged_digits;
      q["history"] = json::array();
      for (const auto& h : res.history)
        q["history"].push_back({{"M", h.M},
                                {"params", pj(s, h.params)},
                                {"epsilon", {h.epsilon.real(), h.epsilon.imag()}},
                                {"E_text", h.E_text},
                                {"Gamma_text", h.Gamma_text},
                                {"converged_digits", h.converged_digits}});
      sj["resonances"].push_back(q);
    }
    j["sectors"].push_back(sj);
  }
  return j;
}

RunReport report_from_json(const json& j) {
  RunReport r;
  r.name = j.at("name").get<std::string>();
  r.tier = j.at("tier").get<std::string>();
  r.digits = j.at("digits").get<int>();
  auto cz = [](const json& a) { return std::complex<double>{a.at(0).get<double>(), a.at(1).get<double>()}; };
  for (const auto& sj : j.at("sectors")) {
    SectorReport s;
    s.label = sj.at("label").get<std::string>();
    s.param_names = sj.at("param_names").get<std::vector<std::string>>();
    for (const auto& rj : sj.at("rungs")) {
      RungOutcome rung;
      rung.M = rj.at("M").get<std::size_t>();
      rung.params = unpacked(s.param_names, rj.at("params"));
      rung.spectrum.M = rung.M;
      rung.spectrum.params = rung.params;
      rung.spectrum.digits = rj.at("digits").get<int>();
      for (const auto& z : rj.at("eigenvalues")) rung.spectrum.eigenvalues.push_back(cz(z));
      if (rj.contains("eigenvalues_text"))
        for (const auto& t : rj.at("eigenvalues_text"))
          rung.spectrum.text.emplace_back(t.at(0).get<std::string>(), t.at(1).get<std::string>());
      s.rungs.push_back(std::move(rung));
    }
    for (const auto& q : sj.at("resonances")) {
      ResonanceResult res;
      res.index = q.at("index").get<std::size_t>();
      res.sector = s.label;
      res.E = q.at("E").get<double>();
      res.Gamma = q.at("Gamma").get<double>();
      res.E_text = q.at("E_text").get<std::string>();
      res.Gamma_text = q.at("Gamma_text").get<std::string>();
      res.converged_digits = q.at("converged_digits").get<double>();
      for (const auto& h : q.at("history"))
        res.history.push_back({h.at("M").get<std::size_t>(), unpacked(s.param_names, h.at("params")), cz(h.at("epsilon")),
                               h.at("E_text").get<std::string>(), h.at("Gamma_text").get<std::string>(),
                               h.at("converged_digits").get<double>()});
      s.resonances.push_back(std::move(res));
    }
    r.sectors.push_back(std::move(s));
  }
  return r;
}

namespace {

void write_to(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path + " for writing");
  f << body;
  if (!f) throw Error("write failed: " + path);
}

}  // namespace

void emit_table(const RunReport& report, const std::string& format, const std::string& path) {
  std::ostringstream ss;
  if (format == "json") {
    ss << to_json(report).dump(1) << "\n";
  } else if (format == "csv") {
    write_csv(report, ss);
  } else {
    throw ConfigError("unknown output format " + format);
  }
  write_to(path, ss.str());
}

json figure_data(const RunConfig& config, const RunReport& report) {
  const PotentialSpec pot = config.base_potential();
  const bool half = pot.domain == Domain::half_line || config.family == "radial_ho";
  double a = config.figure.x_min, b = config.figure.x_max;
  if (a == 0.0 && b == 0.0) {
    b = 4.0 * characteristic_length(pot);
    a = half ? 0.0 : -b;
  }
  const std::size_t n = std::max<std::size_t>(config.figure.samples, 2);
  std::vector<double> xs, vs;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    if (half && x <= 0.0 && pot.has_centrifugal()) continue;
    xs.push_back(x);
    vs.push_back(eval(pot, x).real());
  }
  json j;
  j["name"] = report.name;
  j["potential"] = pot.name;
  j["grid"] = {{"x_min", a}, {"x_max", b}, {"samples", xs.size()}};
  j["samples"] = json::array();
  for (std::size_t i = 0; i < xs.size(); ++i) j["samples"].push_back({xs[i], vs[i]});

  // the well: local minimum of V nearest the origin
  std::size_t well = 0;
  double best = HUGE_VAL;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const bool left = i == 0 || vs[i] <= vs[i - 1];
    const bool right = i + 1 == xs.size() || vs[i] <= vs[i + 1];
    if (left && right && std::abs(xs[i]) < best) {
      best = std::abs(xs[i]);
      well = i;
    }
  }
  struct Level {
    std::string sector;
    std::size_t index;
    double E, Gamma;
  };
  std::vector<Level> levels;
  for (const auto& s : report.sectors)
    for (const auto& res : s.resonances) levels.push_back({s.label, res.index, res.E, res.Gamma});
  std::stable_sort(levels.begin(), levels.end(), [](const Level& p, const Level& q) { return p.E < q.E; });
  if (config.figure.max_states > 0 && levels.size() > config.figure.max_states) levels.resize(config.figure.max_states);

  j["segments"] = json::array();
  for (const auto& lv : levels) {
    double lo = xs.front(), hi = xs.back();
    if (!xs.empty() && vs[well] <= lv.E) {
      std::size_t i = well, k = well;
      while (i > 0 && vs[i - 1] <= lv.E) --i;
      while (k + 1 < xs.size() && vs[k + 1] <= lv.E) ++k;
      lo = xs[i];
      hi = xs[k];
    }
    j["segments"].push_back(
        {{"sector", lv.sector}, {"index", lv.index}, {"E", lv.E}, {"Gamma", lv.Gamma}, {"x_from", lo}, {"x_to", hi}});
  }
  return j;
}

void emit_figure_data(const RunConfig& config, const RunReport& report, const std::string& path) {
  write_to(path, figure_data(config, report).dump(1) + "\n");
}

}  // namespace resonax
