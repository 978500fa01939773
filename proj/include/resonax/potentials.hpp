#pragma once

#include <complex>
#include <string>
#include <vector>

#include "resonax/quad_double.hpp"

namespace resonax {

enum class TermKind { monomial, gaussian, exp_poly, centrifugal };
enum class Domain { full_line, half_line };
enum class Symmetry { even, none, radial };

// One additive piece of V. Coefficients are complex so the potential can be
// evaluated along a rotated ray; physical inputs are real.
//   monomial     c x^p
//   gaussian     c e^{-beta x^2}
//   exp_poly     c x^p e^{-a x}
//   centrifugal  c / x^2   (c = Lambda(Lambda+1)/2)
struct PotentialTerm {
  TermKind kind = TermKind::monomial;
  std::complex<double> coefficient{0.0, 0.0};
  int power = 0;
  double decay = 0.0;
  // Re coefficient and decay as given (e.g. decimal 0.02), before rounding to
  // binary64; the extended tiers read these.
  QuadDouble coefficient_x, decay_x;

  static PotentialTerm monomial(std::complex<double> c, int p);
  static PotentialTerm gaussian(std::complex<double> c, double beta);
  static PotentialTerm exp_poly(std::complex<double> c, int p, double a);
  static PotentialTerm centrifugal(double strength);
  static PotentialTerm monomial(double c, int p) { return monomial(std::complex<double>(c), p); }
  static PotentialTerm gaussian(double c, double beta) { return gaussian(std::complex<double>(c), beta); }
  static PotentialTerm exp_poly(double c, int p, double a) { return exp_poly(std::complex<double>(c), p, a); }
  static PotentialTerm monomial(const QuadDouble& c, int p);
  static PotentialTerm gaussian(const QuadDouble& c, const QuadDouble& beta);
  static PotentialTerm exp_poly(const QuadDouble& c, int p, const QuadDouble& a);

  // Fall back to the binary64 fields when the extended ones were not kept in step.
  QuadDouble real_coefficient() const {
    return static_cast<double>(coefficient_x) == coefficient.real() ? coefficient_x : QuadDouble(coefficient.real());
  }
  QuadDouble exact_decay() const { return static_cast<double>(decay_x) == decay ? decay_x : QuadDouble(decay); }
};

struct PotentialSpec {
  std::string name = "custom";
  std::vector<PotentialTerm> terms;
  Domain domain = Domain::full_line;
  Symmetry symmetry = Symmetry::none;

  // Checks the term invariants and the domain/symmetry pairing; throws Error.
  void validate() const;
  bool has_centrifugal() const;
  double centrifugal_strength() const;
  bool is_polynomial() const;  // monomials (and centrifugal) only
  int max_power() const;       // largest monomial power
  // Dense monomial coefficients c[p] (centrifugal terms excluded).
  std::vector<std::complex<double>> polynomial() const;
};

struct AngularSector {
  int l = 0;
  int D = 3;
  double Lambda = 0.0;
  double centrifugal_strength() const { return Lambda * (Lambda + 1.0) / 2.0; }
};

// Builds a spec and fills in the detected symmetry.
PotentialSpec make_potential(std::string name, std::vector<PotentialTerm> terms,
                             Domain domain = Domain::full_line);

// Sum of the terms at complex z. Throws DomainError at z = 0 with a
// centrifugal term present.
std::complex<double> eval(const PotentialSpec& potential, std::complex<double> z);

Symmetry detect_symmetry(const PotentialSpec& potential);

AngularSector reduce_radial(int l, int D);

// Length scale used to seed parameter searches.
double characteristic_length(const PotentialSpec& potential);

// The Hamiltonians in scope. Kinetic energy -1/2 d^2/dx^2 is implicit.
PotentialSpec harmonic();                                // x^2/2
PotentialSpec quartic(double lambda);                    // x^2/2 - (lambda/2) x^4
PotentialSpec triple_well(double g);                     // x^2/2 - g^2 x^4 + (g^4/2) x^6
PotentialSpec cubic(double gamma);                       // x^2/2 + gamma x^3
PotentialSpec gaussian_quartic(double lambda, double depth = 5.0, double beta = 0.1);
PotentialSpec mexican_hat(double g, const AngularSector& sector);  // + r^2/2 - (g/2) r^4
// Same, with couplings kept beyond binary64 (parsed from decimal text).
PotentialSpec quartic(const QuadDouble& lambda);
PotentialSpec triple_well(const QuadDouble& g);
PotentialSpec cubic(const QuadDouble& gamma);
PotentialSpec gaussian_quartic(const QuadDouble& lambda, const QuadDouble& depth, const QuadDouble& beta);
PotentialSpec mexican_hat(const QuadDouble& g, const AngularSector& sector);
PotentialSpec bardsley(const QuadDouble& v0);
PotentialSpec bardsley(double v0);                       // v0 r^2 e^{-r}

const char* to_string(Symmetry s);
const char* to_string(Domain d);

}  // namespace resonax
