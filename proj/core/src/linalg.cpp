#include "mdisc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mdisc {

namespace {

constexpr double kOffDiagThreshold = 1e-13;
constexpr int kMaxSweeps = 100;

double offdiag_frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

HermitianEigenResult hermitian_eigen(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("hermitian_eigen: non-square matrix");
  const std::size_t n = m.rows();
  const double scale = std::max(1.0, m.max_abs());
  if (!is_hermitian(m, 1e-10 * scale))
    throw std::invalid_argument("hermitian_eigen: input is not Hermitian within tolerance");

  // Symmetrize; from here on A stays exactly Hermitian by construction.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double fro = std::max(1.0, a.frobenius_norm());
  for (int sweep = 0; sweep < kMaxSweeps && n > 1; ++sweep) {
    if (offdiag_frobenius(a) <= kOffDiagThreshold * fro) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= 1e-300) continue;
        const cplx phase = apq / r;  // a_pq = r * phase
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Plane rotation J: J(p,p)=c, J(p,q)=s*phase, J(q,p)=-s*conj(phase), J(q,q)=c.
        // A <- J^dagger A J zeroes A(p,q).
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const cplx aip = a(i, p);
          const cplx aiq = a(i, q);
          a(i, p) = c * aip - s * std::conj(phase) * aiq;
          a(i, q) = s * phase * aip + c * aiq;
          a(p, i) = std::conj(a(i, p));
          a(q, i) = std::conj(a(i, q));
        }
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          const cplx vip = v(i, p);
          const cplx viq = v(i, q);
          v(i, p) = c * vip - s * std::conj(phase) * viq;
          v(i, q) = s * phase * vip + c * viq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&a](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigenResult result;
  result.eigenvalues.resize(n);
  result.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    result.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) result.eigenvectors(i, k) = v(i, order[k]);
  }
  return result;
}

double trace_norm(const ComplexMatrix& m) {
  const double scale = std::max(1.0, m.max_abs());
  if (!is_hermitian(m, 1e-10 * scale))
    throw std::invalid_argument("trace_norm: input is not Hermitian");
  const auto eig = hermitian_eigen(m);
  double s = 0.0;
  for (double lambda : eig.eigenvalues) s += std::abs(lambda);
  return s;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
  return true;
}

bool is_psd(const ComplexMatrix& m, double tol) {
  if (!m.is_square() || !is_hermitian(m, tol)) return false;
  const auto eig = hermitian_eigen(m);
  return eig.eigenvalues.empty() || eig.eigenvalues.front() >= -tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) throw std::invalid_argument("is_unitary: non-square matrix");
  const ComplexMatrix g = m.adjoint() * m;
  ComplexMatrix diff = g - ComplexMatrix::identity(m.rows());
  return diff.max_abs() <= tol;
}

ComplexMatrix inv_sqrt_psd(const ComplexMatrix& m, double floor) {
  const auto eig = hermitian_eigen(m);
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (eig.eigenvalues[k] <= floor) continue;
    const double w = 1.0 / std::sqrt(eig.eigenvalues[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += w * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
  }
  return out;
}

ComplexMatrix kernel_projector(const ComplexMatrix& m, double floor) {
  const auto eig = hermitian_eigen(m);
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (eig.eigenvalues[k] > floor) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
  }
  return out;
}

}  // namespace mdisc
