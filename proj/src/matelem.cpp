#include "matelem_impl.hpp"

#include <cmath>

namespace resonax {

void check_supported(const BasisSpec& basis, const PotentialSpec& potential) {
  potential.validate();
  const std::string pair = std::string("(") + to_string(basis.kind()) + ", " + potential.name + ")";
  if (basis.radial() != (potential.domain == Domain::half_line))
    throw Unsupported("basis and potential live on different domains " + pair);

  switch (basis.kind()) {
    case BasisKind::ho:
    case BasisKind::shifted_ho:
      if (!potential.is_polynomial() || potential.has_centrifugal())
        throw Unsupported("oscillator basis needs a polynomial potential " + pair);
      if (basis.sector() != Sector::all && potential.symmetry != Symmetry::even)
        throw Unsupported("parity sectors need a reflection-symmetric potential " + pair);
      break;
    case BasisKind::radial_ho: {
      for (const auto& t : potential.terms) {
        if (t.kind == TermKind::centrifugal) continue;
        if (t.kind != TermKind::monomial || t.power % 2 != 0)
          throw Unsupported("radial oscillator basis needs even powers of r " + pair);
      }
      const double lam = basis.Lambda();
      if (std::abs(potential.centrifugal_strength() - lam * (lam + 1.0) / 2.0) > 1e-12)
        throw Unsupported("centrifugal strength does not match the basis Lambda " + pair);
      break;
    }
    case BasisKind::trig_even:
    case BasisKind::trig_odd:
      if (potential.symmetry != Symmetry::even)
        throw Unsupported("parity trig bases need a reflection-symmetric potential " + pair);
      for (const auto& t : potential.terms)
        if (t.kind != TermKind::monomial && t.kind != TermKind::gaussian)
          throw Unsupported("trig basis has no route for this term " + pair);
      break;
    case BasisKind::radial_trig:
      if (potential.centrifugal_strength() != 0.0)
        throw Unsupported("radial trig basis needs a vanishing centrifugal term " + pair);
      break;
  }
}

#define RESONAX_MATELEM_INSTANCES(R)                                                                           \
  template RRMatrix<R> build_matrix<R>(const BasisSpec&, const PotentialSpec&, const ParamPoint<R>&, std::size_t, \
                                       std::size_t);                                                           \
  template class TraceFunction<R>;                                                                             \
  template KernelTable<R> trig_kernels<R>(const PotentialSpec&, bool, const std::complex<R>&, std::size_t, int,  \
                                          std::size_t);

RESONAX_MATELEM_INSTANCES(double)
RESONAX_MATELEM_INSTANCES(DoubleDouble)

}  // namespace resonax
