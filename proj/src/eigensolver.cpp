#include "eigensolver_impl.hpp"

#include <cmath>

namespace resonax {

template std::vector<std::complex<double>> general_eigenvalues<double>(Matrix<std::complex<double>>, bool);
template std::vector<std::complex<DoubleDouble>> general_eigenvalues<DoubleDouble>(
    Matrix<std::complex<DoubleDouble>>, bool);
template std::vector<std::complex<double>> symmetric_tridiagonal_eigenvalues<double>(
    std::vector<std::complex<double>>, std::vector<std::complex<double>>);

namespace {

using C = std::complex<double>;

// Band storage with room for one bulge diagonal beyond the half-bandwidth.
class BandWork {
 public:
  BandWork(std::size_t n, std::size_t width) : n_(n), w_(width), a_(n * (width + 1), C(0)) {}
  C get(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    const std::size_t d = j - i;
    return d > w_ || j >= n_ ? C(0) : a_[i * (w_ + 1) + d];
  }
  void set(std::size_t i, std::size_t j, C v) {
    if (i > j) std::swap(i, j);
    a_[i * (w_ + 1) + (j - i)] = v;
  }
  std::size_t width() const { return w_; }

 private:
  std::size_t n_;
  std::size_t w_;
  std::vector<C> a_;
};

// Complex orthogonal similarity in plane (p, p+1) chosen so the new
// A(p+1, col) vanishes. Returns false when x^2 + y^2 is (numerically) zero.
bool rotate_out(BandWork& a, std::size_t n, std::size_t p, std::size_t col) {
  const std::size_t q = p + 1;
  const C x = a.get(p, col);
  const C y = a.get(q, col);
  if (y == C(0)) return true;
  const C r = std::sqrt(x * x + y * y);
  if (std::abs(r) <= 1e-300 + 1e-14 * (std::abs(x) + std::abs(y))) return false;
  const C c = x / r;
  const C s = y / r;
  const std::size_t w = a.width();
  const std::size_t lo = p >= w ? p - w : 0;
  const std::size_t hi = std::min(n - 1, q + w);
  for (std::size_t j = lo; j <= hi; ++j) {
    if (j == p || j == q) continue;
    const C ap = a.get(p, j);
    const C aq = a.get(q, j);
    if (ap == C(0) && aq == C(0)) continue;
    const C np = c * ap + s * aq;
    const C nq = c * aq - s * ap;
    const std::size_t dp = j > p ? j - p : p - j;
    const std::size_t dq = j > q ? j - q : q - j;
    if (dp <= w) a.set(p, j, np);
    if (dq <= w) a.set(q, j, nq);
  }
  const C app = a.get(p, p);
  const C apq = a.get(p, q);
  const C aqq = a.get(q, q);
  a.set(p, p, c * c * app + 2.0 * c * s * apq + s * s * aqq);
  a.set(q, q, s * s * app - 2.0 * c * s * apq + c * c * aqq);
  a.set(p, q, c * s * (aqq - app) + (c * c - s * s) * apq);
  a.set(q, col, C(0));
  return true;
}

}  // namespace

std::vector<std::complex<double>> symmetric_band_eigenvalues(const SymmetricBand& band) {
  const std::size_t n = band.n;
  const std::size_t b = band.diagonals.empty() ? 0 : band.diagonals.size() - 1;
  if (b > 2) throw Unsupported("band eigenvalues: half-bandwidth above 2");
  if (n == 0) return {};
  BandWork a(n, b + 1);
  for (std::size_t k = 0; k <= b; ++k)
    for (std::size_t i = 0; i + k < n; ++i) a.set(i, i + k, band.diagonals[k][i]);

  if (b == 2) {
    for (std::size_t k = 0; k + 2 < n; ++k) {
      std::size_t row = k + 2;
      std::size_t col = k;
      while (row < n) {
        if (!rotate_out(a, n, row - 1, col)) {
          throw ConvergenceError("band reduction hit an isotropic rotation", static_cast<int>(row));
        }
        // the rotation leaves a bulge at (row + 2, row - 1)
        col = row - 1;
        row += 2;
      }
    }
  }
  std::vector<C> d(n), e(n, C(0));
  for (std::size_t i = 0; i < n; ++i) d[i] = a.get(i, i);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = a.get(i, i + 1);
  return symmetric_tridiagonal_eigenvalues<double>(std::move(d), std::move(e));
}

std::complex<double> polish_symmetric_eigenvalue(const Matrix<std::complex<double>>& a,
                                                 std::complex<double> lambda, int rounds,
                                                 const Matrix<std::complex<DoubleDouble>>* exact) {
  const std::size_t n = a.rows();
  if (n == 0) return lambda;
  double norm = 0.0;
  for (const auto& z : a.storage()) norm = std::max(norm, std::abs(z));

  std::vector<C> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = C(1.0 / (1.0 + i), 0.37 / (2.0 + i));

  for (int round = 0; round < rounds; ++round) {
    // LU of A - lambda I with partial pivoting.
    Matrix<C> lu = a;
    for (std::size_t i = 0; i < n; ++i) lu(i, i) -= lambda;
    std::vector<std::size_t> piv(n);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      double best = std::abs(lu(k, k));
      for (std::size_t i = k + 1; i < n; ++i) {
        if (std::abs(lu(i, k)) > best) {
          best = std::abs(lu(i, k));
          p = i;
        }
      }
      piv[k] = p;
      if (p != k)
        for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
      if (lu(k, k) == C(0)) lu(k, k) = C(1e-300 + 1e-17 * norm);
      for (std::size_t i = k + 1; i < n; ++i) {
        const C f = lu(i, k) / lu(k, k);
        lu(i, k) = f;
        if (f == C(0)) continue;
        for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      }
    }
    for (int it = 0; it < 2; ++it) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(v[k], v[piv[k]]);
        for (std::size_t i = k + 1; i < n; ++i) v[i] -= lu(i, k) * v[k];
      }
      for (std::size_t k = n; k-- > 0;) {
        for (std::size_t j = k + 1; j < n; ++j) v[k] -= lu(k, j) * v[j];
        v[k] /= lu(k, k);
      }
      double s = 0.0;
      for (const auto& z : v) s = std::max(s, std::abs(z));
      if (!(s > 0.0) || !std::isfinite(s)) return lambda;
      for (auto& z : v) z /= s;
    }

    using D = std::complex<DoubleDouble>;
    D num(0), den(0);
    for (std::size_t i = 0; i < n; ++i) {
      D row(0);
      for (std::size_t j = 0; j < n; ++j)
        row += (exact ? (*exact)(i, j) : D(a(i, j).real(), a(i, j).imag())) * D(v[j].real(), v[j].imag());
      const D vi(v[i].real(), v[i].imag());
      num += vi * row;
      den += vi * vi;
    }
    if (den == D(0)) return lambda;
    const C next = to_double(num / den);
    if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) return lambda;
    // guard against drifting onto a neighbouring eigenvalue
    if (std::abs(next - lambda) > 1e-6 * std::max(1.0, std::abs(lambda))) return lambda;
    lambda = next;
  }
  return lambda;
}

}  // namespace resonax
