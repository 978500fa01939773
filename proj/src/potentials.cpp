#include "resonax/potentials.hpp"

#include <algorithm>
#include <cmath>

#include "resonax/errors.hpp"

namespace resonax {

PotentialTerm PotentialTerm::monomial(std::complex<double> c, int p) {
  return {TermKind::monomial, c, p, 0.0, c.real(), 0.0};
}
PotentialTerm PotentialTerm::gaussian(std::complex<double> c, double beta) {
  return {TermKind::gaussian, c, 0, beta, c.real(), beta};
}
PotentialTerm PotentialTerm::exp_poly(std::complex<double> c, int p, double a) {
  return {TermKind::exp_poly, c, p, a, c.real(), a};
}
PotentialTerm PotentialTerm::centrifugal(double strength) {
  return {TermKind::centrifugal, {strength, 0.0}, -2, 0.0, strength, 0.0};
}
PotentialTerm PotentialTerm::monomial(const QuadDouble& c, int p) {
  return {TermKind::monomial, static_cast<double>(c), p, 0.0, c, 0.0};
}
PotentialTerm PotentialTerm::gaussian(const QuadDouble& c, const QuadDouble& beta) {
  return {TermKind::gaussian, static_cast<double>(c), 0, static_cast<double>(beta), c, beta};
}
PotentialTerm PotentialTerm::exp_poly(const QuadDouble& c, int p, const QuadDouble& a) {
  return {TermKind::exp_poly, static_cast<double>(c), p, static_cast<double>(a), c, a};
}

void PotentialSpec::validate() const {
  if (terms.empty()) throw Error("potential '" + name + "' has no terms");
  for (const auto& t : terms) {
    switch (t.kind) {
      case TermKind::monomial:
        if (t.power < 0) throw Error("monomial power must be nonnegative");
        break;
      case TermKind::gaussian:
        if (!(t.decay > 0.0)) throw Error("gaussian decay must be positive");
        break;
      case TermKind::exp_poly:
        if (!(t.decay > 0.0)) throw Error("exp_poly decay must be positive");
        if (t.power < 0) throw Error("exp_poly power must be nonnegative");
        break;
      case TermKind::centrifugal:
        if (domain != Domain::half_line) throw Error("centrifugal term needs the half-line domain");
        break;
    }
  }
  if ((domain == Domain::half_line) != (symmetry == Symmetry::radial))
    throw Error("half-line domain and radial symmetry must go together");
  if (symmetry == Symmetry::even && detect_symmetry(*this) != Symmetry::even)
    throw Error("potential '" + name + "' is marked even but is not reflection symmetric");
}

bool PotentialSpec::has_centrifugal() const {
  return std::any_of(terms.begin(), terms.end(), [](const PotentialTerm& t) { return t.kind == TermKind::centrifugal; });
}

double PotentialSpec::centrifugal_strength() const {
  double c = 0.0;
  for (const auto& t : terms)
    if (t.kind == TermKind::centrifugal) c += t.coefficient.real();
  return c;
}

bool PotentialSpec::is_polynomial() const {
  return std::all_of(terms.begin(), terms.end(), [](const PotentialTerm& t) {
    return t.kind == TermKind::monomial || t.kind == TermKind::centrifugal;
  });
}

int PotentialSpec::max_power() const {
  int p = 0;
  for (const auto& t : terms)
    if (t.kind == TermKind::monomial) p = std::max(p, t.power);
  return p;
}

std::vector<std::complex<double>> PotentialSpec::polynomial() const {
  std::vector<std::complex<double>> c(static_cast<std::size_t>(max_power()) + 1, 0.0);
  for (const auto& t : terms) {
    if (t.kind == TermKind::monomial) c[static_cast<std::size_t>(t.power)] += t.coefficient;
    else if (t.kind != TermKind::centrifugal) throw Unsupported("potential '" + name + "' is not polynomial");
  }
  return c;
}

PotentialSpec make_potential(std::string name, std::vector<PotentialTerm> terms, Domain domain) {
  PotentialSpec p;
  p.name = std::move(name);
  p.terms = std::move(terms);
  p.domain = domain;
  if (p.terms.empty()) throw Error("potential '" + p.name + "' has no terms");
  p.symmetry = detect_symmetry(p);
  p.validate();
  return p;
}

std::complex<double> eval(const PotentialSpec& potential, std::complex<double> z) {
  std::complex<double> v = 0.0;
  for (const auto& t : potential.terms) {
    switch (t.kind) {
      case TermKind::monomial:
        v += t.coefficient * std::pow(z, t.power);
        break;
      case TermKind::gaussian:
        v += t.coefficient * std::exp(-t.decay * z * z);
        break;
      case TermKind::exp_poly:
        v += t.coefficient * std::pow(z, t.power) * std::exp(-t.decay * z);
        break;
      case TermKind::centrifugal:
        if (z == 0.0) throw DomainError("centrifugal term is singular at the origin");
        v += t.coefficient / (z * z);
        break;
    }
  }
  return v;
}

Symmetry detect_symmetry(const PotentialSpec& potential) {
  if (potential.terms.empty()) throw Error("potential has no terms");
  if (potential.domain == Domain::half_line) return Symmetry::radial;
  for (const auto& t : potential.terms) {
    if (t.kind == TermKind::exp_poly) return Symmetry::none;
    if (t.kind == TermKind::monomial && t.power % 2 != 0 && t.coefficient != 0.0) return Symmetry::none;
  }
  return Symmetry::even;
}

AngularSector reduce_radial(int l, int D) {
  if (l < 0) throw Error("angular momentum must be nonnegative");
  if (D < 2) throw Error("space dimension must be at least 2");
  return {l, D, l + D / 2.0 - 1.5};
}

double characteristic_length(const PotentialSpec& potential) {
  double len = 1.0;
  for (const auto& t : potential.terms) {
    if (t.kind == TermKind::gaussian) len = std::max(len, 1.0 / std::sqrt(t.decay));
    if (t.kind == TermKind::exp_poly) len = std::max(len, (t.power + 1.0) / t.decay);
  }
  return len;
}

PotentialSpec harmonic() {
  return make_potential("harmonic", {PotentialTerm::monomial(0.5, 2)});
}

PotentialSpec quartic(double lambda) { return quartic(QuadDouble(lambda)); }
PotentialSpec triple_well(double g) { return triple_well(QuadDouble(g)); }
PotentialSpec cubic(double gamma) { return cubic(QuadDouble(gamma)); }
PotentialSpec gaussian_quartic(double lambda, double depth, double beta) {
  return gaussian_quartic(QuadDouble(lambda), QuadDouble(depth), QuadDouble(beta));
}
PotentialSpec mexican_hat(double g, const AngularSector& sector) { return mexican_hat(QuadDouble(g), sector); }
PotentialSpec bardsley(double v0) { return bardsley(QuadDouble(v0)); }

PotentialSpec quartic(const QuadDouble& lambda) {
  return make_potential("quartic", {PotentialTerm::monomial(0.5, 2), PotentialTerm::monomial(-ldexp(lambda, -1), 4)});
}

PotentialSpec triple_well(const QuadDouble& g) {
  const QuadDouble g2 = g * g;
  return make_potential("triple_well", {PotentialTerm::monomial(0.5, 2), PotentialTerm::monomial(-g2, 4),
                                        PotentialTerm::monomial(ldexp(g2 * g2, -1), 6)});
}

PotentialSpec cubic(const QuadDouble& gamma) {
  return make_potential("cubic", {PotentialTerm::monomial(0.5, 2), PotentialTerm::monomial(gamma, 3)});
}

PotentialSpec gaussian_quartic(const QuadDouble& lambda, const QuadDouble& depth, const QuadDouble& beta) {
  return make_potential("gaussian_quartic",
                        {PotentialTerm::gaussian(-depth, beta), PotentialTerm::monomial(-ldexp(lambda, -1), 4)});
}

PotentialSpec mexican_hat(const QuadDouble& g, const AngularSector& sector) {
  std::vector<PotentialTerm> terms;
  if (sector.centrifugal_strength() != 0.0) terms.push_back(PotentialTerm::centrifugal(sector.centrifugal_strength()));
  terms.push_back(PotentialTerm::monomial(0.5, 2));
  terms.push_back(PotentialTerm::monomial(-ldexp(g, -1), 4));
  return make_potential("mexican_hat", std::move(terms), Domain::half_line);
}

PotentialSpec bardsley(const QuadDouble& v0) {
  return make_potential("bardsley", {PotentialTerm::exp_poly(v0, 2, QuadDouble(1.0))}, Domain::half_line);
}

const char* to_string(Symmetry s) {
  switch (s) {
    case Symmetry::even: return "even";
    case Symmetry::none: return "none";
    case Symmetry::radial: return "radial";
  }
  return "?";
}

const char* to_string(Domain d) { return d == Domain::full_line ? "full_line" : "half_line"; }

}  // namespace resonax
