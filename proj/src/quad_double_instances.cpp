// Widest tier, kept in its own translation unit since it is slow to compile.
#include "eigensolver_impl.hpp"
#include "matelem_impl.hpp"
#include "optimizer_impl.hpp"
#include "quadrature_impl.hpp"

namespace resonax {

using F = QuadDouble;

template const GaussLegendre<F>& gauss_legendre<F>(std::size_t);
template GaussLegendre<F> gauss_legendre_on<F>(std::size_t, const F&, const F&);

template std::vector<std::complex<F>> general_eigenvalues<F>(Matrix<std::complex<F>>, bool);

template RRMatrix<F> build_matrix<F>(const BasisSpec&, const PotentialSpec&, const ParamPoint<F>&, std::size_t,
                                     std::size_t);
template class TraceFunction<F>;
template KernelTable<F> trig_kernels<F>(const PotentialSpec&, bool, const std::complex<F>&, std::size_t, int,
                                        std::size_t);

template std::vector<RootCandidate> stationary_points<F>(const TraceFunction<F>&, const OptimizerOptions&);
template ParamPoint<double> optimize_shifted<F>(const TraceFunction<F>&, const OptimizerOptions&,
                                                const std::optional<ParamPoint<double>>&);
template ParamPoint<F> polish_root<F>(const TraceFunction<F>&, const ParamPoint<double>&, int);

}  // namespace resonax
