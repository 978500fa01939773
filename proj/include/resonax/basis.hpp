#pragma once

#include <complex>
#include <optional>
#include <type_traits>
#include <string>
#include <vector>

#include "resonax/numeric.hpp"

namespace resonax {

enum class BasisKind { ho, shifted_ho, trig_even, trig_odd, radial_ho, radial_trig };
enum class Sector { even, odd, all, radial };

struct BasisFamily {
  BasisKind kind = BasisKind::ho;
  Sector sector = Sector::all;
  double Lambda = 0.0;  // radial_ho only
};

// Nonlinear parameters; exactly the ones the family uses are set.
template <class R = double>
struct ParamPoint {
  std::optional<std::complex<R>> omega;
  std::optional<std::complex<R>> t;
  std::optional<std::complex<R>> L;

  template <class S>
  ParamPoint<S> convert() const {
    ParamPoint<S> out;
    auto cv = [](const std::optional<std::complex<R>>& z) -> std::optional<std::complex<S>> {
      if (!z) return std::nullopt;
      if constexpr (std::is_same_v<R, double>) return complex_from<S>(*z);
      else return complex_from<S>(to_double(*z));
    };
    out.omega = cv(omega);
    out.t = cv(t);
    out.L = cv(L);
    return out;
  }
};

class BasisSpec {
 public:
  BasisSpec() = default;
  explicit BasisSpec(BasisFamily family) : family_(family) {}

  const BasisFamily& family() const { return family_; }
  BasisKind kind() const { return family_.kind; }
  Sector sector() const { return family_.sector; }
  double Lambda() const { return family_.Lambda; }

  bool oscillator() const;  // ho, shifted_ho, radial_ho
  bool trigonometric() const;
  bool radial() const;

  // Family index of the n-th function of the sector (even HO: n -> 2n).
  std::size_t function_index(std::size_t n) const;

  // Active parameter names in layout order: {"Omega"}, {"Omega","t"} or {"L"}.
  std::vector<std::string> param_names() const;

  // Packs / unpacks the active parameters as a flat vector.
  template <class R>
  std::vector<std::complex<R>> pack(const ParamPoint<R>& p) const;
  template <class R>
  ParamPoint<R> unpack(const std::vector<std::complex<R>>& v) const;

 private:
  BasisFamily family_;
};

// Throws Error for an incompatible (family, sector) pair.
BasisSpec make_basis(BasisKind kind, Sector sector, double Lambda = 0.0);

// Oscillator families: Re Omega > 0 and Im Omega <= 0.
// Trig families: Im L >= 0 and L != 0.
bool in_validity_region(const BasisSpec& basis, const ParamPoint<double>& params);

// Presence check plus the validity region; throws InvalidParams.
void check_params(const BasisSpec& basis, const ParamPoint<double>& params);

// phi_j(x) with complex parameters at real x (j is the sector index).
// Throws DomainError for x <= 0 on radial families.
std::complex<double> eval_fn(const BasisSpec& basis, std::size_t j, const ParamPoint<double>& params, double x);

// Same formulas continued to complex argument, no domain check.
std::complex<double> eval_fn_at(const BasisSpec& basis, std::size_t j, const ParamPoint<double>& params,
                                std::complex<double> z);

const char* to_string(BasisKind kind);
const char* to_string(Sector sector);
BasisKind parse_basis_kind(const std::string& text);
Sector parse_sector(const std::string& text);

template <class R>
std::vector<std::complex<R>> BasisSpec::pack(const ParamPoint<R>& p) const {
  std::vector<std::complex<R>> v;
  if (trigonometric()) {
    v.push_back(p.L.value());
  } else {
    v.push_back(p.omega.value());
    if (kind() == BasisKind::shifted_ho) v.push_back(p.t.value());
  }
  return v;
}

template <class R>
ParamPoint<R> BasisSpec::unpack(const std::vector<std::complex<R>>& v) const {
  ParamPoint<R> p;
  if (trigonometric()) {
    p.L = v.at(0);
  } else {
    p.omega = v.at(0);
    if (kind() == BasisKind::shifted_ho) p.t = v.at(1);
  }
  return p;
}

}  // namespace resonax
