#include "resonax/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "resonax/eigensolver.hpp"
#include "resonax/errors.hpp"

namespace resonax {

template <class R>
EigenSet eigenvalues(const RRMatrix<R>& matrix) {
  auto w = general_eigenvalues<R>(matrix.entries);
  std::sort(w.begin(), w.end(), [](const std::complex<R>& a, const std::complex<R>& b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  EigenSet set;
  set.M = matrix.M;
  set.params = matrix.params.template convert<double>();
  set.digits = RealTraits<R>::digits10;
  for (const auto& z : w) {
    set.eigenvalues.push_back(to_double(z));
    if constexpr (!std::is_same_v<R, double>)
      set.text.emplace_back(RealTraits<R>::to_string(z.real(), RealTraits<R>::digits10),
                            RealTraits<R>::to_string(z.imag(), RealTraits<R>::digits10));
  }
  return set;
}

template EigenSet eigenvalues<double>(const RRMatrix<double>&);
template EigenSet eigenvalues<DoubleDouble>(const RRMatrix<DoubleDouble>&);
template EigenSet eigenvalues<QuadDouble>(const RRMatrix<QuadDouble>&);

Pairing match_ladder(const EigenSet& prev, const EigenSet& curr, double window) {
  struct Edge {
    double d;
    std::size_t i, j;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < prev.eigenvalues.size(); ++i)
    for (std::size_t j = 0; j < curr.eigenvalues.size(); ++j) {
      const double d = std::abs(prev.eigenvalues[i] - curr.eigenvalues[j]);
      if (d < window) edges.push_back({d, i, j});
    }
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.d < b.d; });
  std::vector<bool> used_prev(prev.eigenvalues.size()), used_curr(curr.eigenvalues.size());
  Pairing out;
  for (const auto& e : edges) {
    if (used_prev[e.i] || used_curr[e.j]) continue;
    used_prev[e.i] = used_curr[e.j] = true;
    out.pairs.emplace_back(e.i, e.j);
  }
  std::sort(out.pairs.begin(), out.pairs.end(), [](auto a, auto b) { return a.second < b.second; });
  for (std::size_t j = 0; j < curr.eigenvalues.size(); ++j)
    if (!used_curr[j]) out.unpaired.push_back(j);
  return out;
}

namespace {

// Gamma as decimal text: -2 Im, computed on the decimal string of Im in the
// working precision so extended digits survive.
std::string gamma_text(const std::string& im_text, int digits) {
  if (im_text.empty()) return {};
  if (digits <= RealTraits<DoubleDouble>::digits10) {
    const DoubleDouble g = DoubleDouble::parse(im_text) * -2.0;
    return g.to_string(digits);
  }
  return (QuadDouble::parse(im_text) * -2.0).to_string(digits);
}

// |curr[ic] - prev[ip]|, from the working-precision text when both rungs carry it
double drift_between(const EigenSet& prev, std::size_t ip, const EigenSet& curr, std::size_t ic) {
  if (prev.text.empty() || curr.text.empty())
    return std::abs(curr.eigenvalues[ic] - prev.eigenvalues[ip]);
  const auto q = [](const std::string& t) { return QuadDouble::parse(t); };
  const double re = static_cast<double>(q(curr.text[ic].first) - q(prev.text[ip].first));
  const double im = static_cast<double>(q(curr.text[ic].second) - q(prev.text[ip].second));
  return std::hypot(re, im);
}

}  // namespace

std::vector<ResonanceResult> resonances(const std::vector<EigenSet>& ladder, double tol, double window,
                                        const std::string& sector) {
  std::vector<ResonanceResult> out;
  if (ladder.size() < 2) return out;
  const std::size_t last = ladder.size() - 1;
  std::vector<Pairing> pairings;
  for (std::size_t r = 1; r < ladder.size(); ++r) pairings.push_back(match_ladder(ladder[r - 1], ladder[r], window));

  const auto& final_set = ladder[last];
  for (const auto& [ip, ic] : pairings.back().pairs) {
    const std::complex<double> eps = final_set.eigenvalues[ic];
    const double drift = drift_between(ladder[last - 1], ip, final_set, ic);
    if (!(drift < tol)) continue;
    if (eps.imag() > tol) continue;
    const auto record = [&](std::size_t r, std::size_t i) {
      const EigenSet& set = ladder[r];
      const std::complex<double> z = set.eigenvalues[i];
      RungRecord rec{set.M, set.params, z, {}, {}, -1.0};
      if (!set.text.empty()) {
        rec.E_text = set.text[i].first;
        rec.Gamma_text = z.imag() > 0.0 ? "0" : gamma_text(set.text[i].second, set.digits);
      }
      return rec;
    };
    const auto digits_of = [](double d, int cap) { return d > 0.0 ? std::min<double>(-std::log10(d), cap) : cap; };

    ResonanceResult res;
    res.sector = sector;
    res.E = eps.real();
    res.Gamma = eps.imag() > 0.0 ? 0.0 : -2.0 * eps.imag();
    res.converged_digits = digits_of(drift, final_set.digits);
    // follow the pairing chain backwards
    std::vector<RungRecord> hist{record(last, ic)};
    hist.back().converged_digits = res.converged_digits;
    res.E_text = hist.back().E_text;
    res.Gamma_text = hist.back().Gamma_text;
    std::size_t idx = ic;
    for (std::size_t r = last; r >= 1; --r) {
      const auto& pr = pairings[r - 1].pairs;
      auto it = std::find_if(pr.begin(), pr.end(), [&](auto p) { return p.second == idx; });
      if (it == pr.end()) break;
      if (r < last) {
        const double d = drift_between(ladder[r - 1], it->first, ladder[r], idx);
        hist.back().converged_digits = digits_of(d, ladder[r].digits);
      }
      idx = it->first;
      hist.push_back(record(r - 1, idx));
    }
    std::reverse(hist.begin(), hist.end());
    res.history = std::move(hist);
    out.push_back(std::move(res));
  }
  std::sort(out.begin(), out.end(), [](const ResonanceResult& a, const ResonanceResult& b) { return a.E < b.E; });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].index = i;
  return out;
}

}  // namespace resonax
