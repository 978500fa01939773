#include "quadrature_impl.hpp"

namespace resonax {

template const GaussLegendre<double>& gauss_legendre<double>(std::size_t);
template const GaussLegendre<DoubleDouble>& gauss_legendre<DoubleDouble>(std::size_t);
template GaussLegendre<double> gauss_legendre_on<double>(std::size_t, const double&, const double&);
template GaussLegendre<DoubleDouble> gauss_legendre_on<DoubleDouble>(std::size_t, const DoubleDouble&,
                                                                     const DoubleDouble&);

}  // namespace resonax
