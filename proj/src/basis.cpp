#include "resonax/basis.hpp"

#include <cmath>

#include "resonax/errors.hpp"

namespace resonax {

bool BasisSpec::oscillator() const {
  return kind() == BasisKind::ho || kind() == BasisKind::shifted_ho || kind() == BasisKind::radial_ho;
}

bool BasisSpec::trigonometric() const { return !oscillator(); }

bool BasisSpec::radial() const { return kind() == BasisKind::radial_ho || kind() == BasisKind::radial_trig; }

std::size_t BasisSpec::function_index(std::size_t n) const {
  if (kind() == BasisKind::ho) {
    if (sector() == Sector::even) return 2 * n;
    if (sector() == Sector::odd) return 2 * n + 1;
  }
  return n;
}

std::vector<std::string> BasisSpec::param_names() const {
  if (trigonometric()) return {"L"};
  if (kind() == BasisKind::shifted_ho) return {"Omega", "t"};
  return {"Omega"};
}

BasisSpec make_basis(BasisKind kind, Sector sector, double Lambda) {
  bool ok = false;
  switch (kind) {
    case BasisKind::ho: ok = sector == Sector::even || sector == Sector::odd || sector == Sector::all; break;
    case BasisKind::shifted_ho: ok = sector == Sector::all; break;
    case BasisKind::trig_even: ok = sector == Sector::even; break;
    case BasisKind::trig_odd: ok = sector == Sector::odd; break;
    case BasisKind::radial_ho:
    case BasisKind::radial_trig: ok = sector == Sector::radial; break;
  }
  if (!ok)
    throw Error(std::string("basis ") + to_string(kind) + " does not support sector " + to_string(sector));
  if (kind == BasisKind::radial_ho && !(Lambda > -1.0))
    throw Error("radial_ho needs Lambda > -1 for normalizable functions");
  return BasisSpec({kind, sector, kind == BasisKind::radial_ho ? Lambda : 0.0});
}

bool in_validity_region(const BasisSpec& basis, const ParamPoint<double>& params) {
  if (basis.oscillator()) {
    if (!params.omega) return false;
    const auto w = *params.omega;
    if (!(w.real() > 0.0 && w.imag() <= 0.0)) return false;
    if (basis.kind() == BasisKind::shifted_ho) {
      if (!params.t) return false;
      if (!std::isfinite(params.t->real()) || !std::isfinite(params.t->imag())) return false;
    }
    return std::isfinite(w.real()) && std::isfinite(w.imag());
  }
  if (!params.L) return false;
  const auto L = *params.L;
  return L.imag() >= 0.0 && L != 0.0 && std::isfinite(L.real()) && std::isfinite(L.imag());
}

void check_params(const BasisSpec& basis, const ParamPoint<double>& params) {
  const bool want_omega = basis.oscillator();
  const bool want_t = basis.kind() == BasisKind::shifted_ho;
  const bool want_L = basis.trigonometric();
  if (params.omega.has_value() != want_omega || params.t.has_value() != want_t || params.L.has_value() != want_L)
    throw InvalidParams(std::string("parameter layout does not match basis ") + to_string(basis.kind()));
  if (!in_validity_region(basis, params))
    throw InvalidParams(std::string("parameters outside the validity region of basis ") + to_string(basis.kind()));
}

namespace {

using C = std::complex<double>;

C hermite_function(std::size_t k, C omega, C shift, C x) {
  const C z = std::sqrt(omega) * (x - shift);
  C prev = 0.0;
  C cur = std::pow(omega / M_PI, 0.25) * std::exp(-z * z / 2.0);
  for (std::size_t n = 0; n < k; ++n) {
    const double dn = static_cast<double>(n);
    const C next = std::sqrt(2.0 / (dn + 1.0)) * z * cur - std::sqrt(dn / (dn + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

C laguerre_function(std::size_t j, C omega, double Lambda, C r) {
  const double a = Lambda + 0.5;
  const C y = omega * r * r;
  // normalized l_n = sqrt(n!/Gamma(n+a+1)) L_n^a(y)
  C prev = 0.0;
  C cur = std::exp(-0.5 * std::lgamma(a + 1.0));
  for (std::size_t n = 0; n < j; ++n) {
    const double dn = static_cast<double>(n);
    const double up = std::sqrt((dn + 1.0) / (dn + a + 1.0));
    const double up2 = n == 0 ? 0.0 : std::sqrt((dn + 1.0) * dn / ((dn + a + 1.0) * (dn + a)));
    const C next = ((2.0 * dn + 1.0 + a - y) * cur * up - (dn + a) * prev * up2) / (dn + 1.0);
    prev = cur;
    cur = next;
  }
  return std::sqrt(2.0 * std::pow(omega, a + 1.0)) * std::pow(r, Lambda + 1.0) * std::exp(-y / 2.0) * cur;
}

}  // namespace

std::complex<double> eval_fn_at(const BasisSpec& basis, std::size_t j, const ParamPoint<double>& params,
                                std::complex<double> x) {
  const std::size_t k = basis.function_index(j);
  const double dk = static_cast<double>(k);
  switch (basis.kind()) {
    case BasisKind::ho:
      return hermite_function(k, *params.omega, 0.0, x);
    case BasisKind::shifted_ho:
      return hermite_function(k, *params.omega, *params.t, x);
    case BasisKind::radial_ho:
      return laguerre_function(k, *params.omega, basis.Lambda(), x);
    case BasisKind::trig_even:
      return std::cos((dk + 0.5) * M_PI * x / *params.L) / std::sqrt(*params.L);
    case BasisKind::trig_odd:
      return std::sin((dk + 1.0) * M_PI * x / *params.L) / std::sqrt(*params.L);
    case BasisKind::radial_trig:
      return std::sqrt(2.0 / *params.L) * std::sin((dk + 1.0) * M_PI * x / *params.L);
  }
  return 0.0;
}

std::complex<double> eval_fn(const BasisSpec& basis, std::size_t j, const ParamPoint<double>& params, double x) {
  check_params(basis, params);
  if (basis.radial() && !(x > 0.0)) throw DomainError("radial basis functions need r > 0");
  return eval_fn_at(basis, j, params, x);
}

const char* to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::ho: return "ho";
    case BasisKind::shifted_ho: return "shifted_ho";
    case BasisKind::trig_even: return "trig_even";
    case BasisKind::trig_odd: return "trig_odd";
    case BasisKind::radial_ho: return "radial_ho";
    case BasisKind::radial_trig: return "radial_trig";
  }
  return "?";
}

const char* to_string(Sector sector) {
  switch (sector) {
    case Sector::even: return "even";
    case Sector::odd: return "odd";
    case Sector::all: return "all";
    case Sector::radial: return "radial";
  }
  return "?";
}

BasisKind parse_basis_kind(const std::string& text) {
  for (auto k : {BasisKind::ho, BasisKind::shifted_ho, BasisKind::trig_even, BasisKind::trig_odd,
                 BasisKind::radial_ho, BasisKind::radial_trig})
    if (text == to_string(k)) return k;
  throw ConfigError("unknown basis family '" + text + "'");
}

Sector parse_sector(const std::string& text) {
  for (auto s : {Sector::even, Sector::odd, Sector::all, Sector::radial})
    if (text == to_string(s)) return s;
  throw ConfigError("unknown sector '" + text + "'");
}

}  // namespace resonax
