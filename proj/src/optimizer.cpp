#include "optimizer_impl.hpp"

namespace resonax {

void LadderPlan::validate() const {
  if (M_list.empty()) throw ConfigError("ladder needs at least one dimension");
  for (std::size_t i = 0; i < M_list.size(); ++i) {
    if (M_list[i] == 0) throw ConfigError("ladder dimensions must be positive");
    if (i > 0 && M_list[i] <= M_list[i - 1]) throw ConfigError("ladder dimensions must be strictly increasing");
  }
  if (!seeds.empty() && seeds.size() != M_list.size()) throw ConfigError("one seed slot per ladder rung");
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& coeffs) {
  using C = std::complex<double>;
  std::size_t deg = coeffs.size();
  while (deg > 0 && coeffs[deg - 1] == 0.0) --deg;
  if (deg <= 1) return {};
  const std::size_t n = deg - 1;
  std::size_t zeros = 0;
  while (zeros < n && coeffs[zeros] == 0.0) ++zeros;
  std::vector<C> roots(zeros, 0.0);
  const std::size_t m = n - zeros;  // degree after removing z^zeros
  if (m == 0) return roots;
  const C lead = coeffs[deg - 1];
  Matrix<C> comp(m, m);
  for (std::size_t k = 0; k < m; ++k) comp(0, k) = -coeffs[deg - 2 - k] / lead;
  for (std::size_t k = 1; k < m; ++k) comp(k, k - 1) = 1.0;
  for (auto z : general_eigenvalues<double>(comp)) {
    for (int it = 0; it < 3; ++it) {
      C p = 0.0, dp = 0.0;
      for (std::size_t k = deg; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + coeffs[k];
      }
      if (dp == 0.0) break;
      const C step = p / dp;
      if (!(std::abs(step) < 1e-3 * std::max(1.0, std::abs(z)))) break;
      z -= step;
    }
    roots.push_back(z);
  }
  return roots;
}

namespace {

using C = std::complex<double>;

// distance in parameter space
double distance(const BasisSpec& basis, const ParamPoint<double>& a, const ParamPoint<double>& b) {
  const auto x = basis.pack(a);
  const auto y = basis.pack(b);
  double s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s += std::norm(x[k] - y[k]);
  return std::sqrt(s);
}

C primary(const BasisSpec& basis, const ParamPoint<double>& p) { return basis.pack(p)[0]; }

// strictly inside, with a margin so roots sitting on an axis up to rounding are excluded
constexpr double kWedgeMargin = 1e-8;

bool rotated(const BasisSpec& basis, const ParamPoint<double>& p) {
  const C z = primary(basis, p);
  const double margin = kWedgeMargin * std::abs(z);
  return basis.trigonometric() ? z.imag() > margin : z.imag() < -margin;
}

bool positive_real(const C& z) { return z.real() > kWedgeMargin * std::abs(z); }

}  // namespace

ParamPoint<double> select_root(const std::vector<RootCandidate>& candidates, const BasisSpec& basis,
                               const std::optional<ParamPoint<double>>& history) {
  if (candidates.empty()) throw Error("no stationary points to choose from");
  std::vector<const RootCandidate*> valid;
  for (const auto& c : candidates)
    if (c.valid) valid.push_back(&c);
  if (valid.empty()) throw Error("no stationary point lies in the validity region");
  if (valid.size() == 1) return valid.front()->params;

  if (history) {
    return (*std::min_element(valid.begin(), valid.end(), [&](const RootCandidate* a, const RootCandidate* b) {
             return distance(basis, a->params, *history) < distance(basis, b->params, *history);
           }))->params;
  }

  // open wedge (positive real part, genuine rotation); least rotation angle wins
  const RootCandidate* best = nullptr;
  for (const auto* c : valid) {
    const C z = primary(basis, c->params);
    if (!positive_real(z) || !rotated(basis, c->params)) continue;
    const C zb = best ? primary(basis, best->params) : C(0.0);
    const double angle = std::abs(std::arg(z));
    const double best_angle = best ? std::abs(std::arg(zb)) : 0.0;
    if (!best || angle < best_angle - 1e-12 || (std::abs(angle - best_angle) <= 1e-12 && std::abs(z) < std::abs(zb)))
      best = c;
  }
  if (best) return best->params;

  for (const auto* c : valid) {
    if (!rotated(basis, c->params)) continue;
    if (!best || c->residual < best->residual ||
        (c->residual == best->residual &&
         std::abs(primary(basis, c->params).imag()) > std::abs(primary(basis, best->params).imag())))
      best = c;
  }
  return best ? best->params : valid.front()->params;
}

#define RESONAX_OPT_INSTANCES(R)                                                                                 \
  template std::vector<RootCandidate> stationary_points<R>(const TraceFunction<R>&, const OptimizerOptions&);      \
  template ParamPoint<double> optimize_shifted<R>(const TraceFunction<R>&, const OptimizerOptions&,              \
                                                  const std::optional<ParamPoint<double>>&);                     \
  template ParamPoint<R> polish_root<R>(const TraceFunction<R>&, const ParamPoint<double>&, int);

RESONAX_OPT_INSTANCES(double)
RESONAX_OPT_INSTANCES(DoubleDouble)

}  // namespace resonax
