// Basis/potential pairs whose closed-form matrix elements must agree with
// brute-force quadrature; each at a real and a complex parameter point.
#pragma once

#include <complex>
#include <vector>

#include "resonax/basis.hpp"
#include "resonax/potentials.hpp"

namespace gated {

using namespace resonax;
using C = std::complex<double>;

struct Case {
  const char* label;
  BasisSpec basis;
  PotentialSpec potential;
  ParamPoint<> real_point;
  ParamPoint<> complex_point;
};

inline ParamPoint<> om(C w) {
  ParamPoint<> p;
  p.omega = w;
  return p;
}
inline ParamPoint<> om_t(C w, C t) {
  ParamPoint<> p;
  p.omega = w;
  p.t = t;
  return p;
}
inline ParamPoint<> ell(C L) {
  ParamPoint<> p;
  p.L = L;
  return p;
}

inline PotentialSpec half_line_mix() {
  return make_potential("half_line_mix",
                        {PotentialTerm::gaussian(-3.0, 0.2), PotentialTerm::monomial(0.05, 3),
                         PotentialTerm::exp_poly(2.0, 1, 0.7)},
                        Domain::half_line);
}

inline std::vector<Case> gated_cases() {
  const auto s0 = reduce_radial(0, 2);
  const auto s1 = reduce_radial(1, 2);
  const auto s3 = reduce_radial(0, 3);
  return {
      {"ho all cubic", make_basis(BasisKind::ho, Sector::all), cubic(0.1), om(1.3), om(C(1.1, -0.4))},
      {"ho even quartic", make_basis(BasisKind::ho, Sector::even), quartic(0.02), om(0.8), om(C(0.72, -0.75))},
      {"ho odd sextic", make_basis(BasisKind::ho, Sector::odd), triple_well(0.3), om(1.0), om(C(0.52, -0.9))},
      {"shifted cubic", make_basis(BasisKind::shifted_ho, Sector::all), cubic(0.1), om_t(1.2, 0.3),
       om_t(C(1.0, -0.3), C(-0.2, -0.4))},
      {"radial ho l=0 D=2", make_basis(BasisKind::radial_ho, Sector::radial, s0.Lambda), mexican_hat(0.1, s0),
       om(1.1), om(C(0.9, -0.5))},
      {"radial ho l=1 D=2", make_basis(BasisKind::radial_ho, Sector::radial, s1.Lambda), mexican_hat(0.1, s1),
       om(0.9), om(C(1.0, -0.6))},
      {"radial ho l=0 D=3", make_basis(BasisKind::radial_ho, Sector::radial, s3.Lambda), mexican_hat(0.1, s3),
       om(1.0), om(C(1.2, -0.4))},
      {"trig even gauss", make_basis(BasisKind::trig_even, Sector::even), gaussian_quartic(0.08), ell(5.0),
       ell(C(5.114, 2.888))},
      {"trig odd gauss", make_basis(BasisKind::trig_odd, Sector::odd), gaussian_quartic(0.08), ell(6.0),
       ell(C(5.872, 3.367))},
      {"radial trig bardsley", make_basis(BasisKind::radial_trig, Sector::radial), bardsley(7.5), ell(6.0),
       ell(C(-0.841, 6.661))},
      {"radial trig mixed", make_basis(BasisKind::radial_trig, Sector::radial), half_line_mix(), ell(4.0),
       ell(C(3.0, 2.0))},
  };
}

}  // namespace gated
