#include "mdisc/povm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mdisc/linalg.hpp"

namespace mdisc {

Povm::Povm(std::size_t dim_, std::vector<ComplexMatrix> elements_)
    : dim(dim_), elements(std::move(elements_)) {
  for (const auto& e : elements) {
    if (e.rows() != dim || e.cols() != dim)
      throw std::invalid_argument("Povm: element dimension mismatch");
    if (!e.all_finite()) throw std::invalid_argument("Povm: non-finite element entries");
  }
}

MeasurementEnsemble::MeasurementEnsemble(std::vector<Povm> measurements_,
                                         std::vector<double> priors_)
    : measurements(std::move(measurements_)), priors(std::move(priors_)) {
  if (measurements.empty()) throw std::invalid_argument("MeasurementEnsemble: empty");
  if (priors.size() != measurements.size())
    throw std::invalid_argument("MeasurementEnsemble: one prior per measurement required");
  dim = measurements.front().dim;
  outcomes = measurements.front().outcomes();
  for (const auto& m : measurements) {
    if (m.dim != dim)
      throw std::invalid_argument("MeasurementEnsemble: dimension mismatch between POVMs");
    if (m.outcomes() != outcomes)
      throw std::invalid_argument("MeasurementEnsemble: ragged outcome counts");
  }
  double sum = 0.0;
  for (double p : priors) {
    if (p < 0.0) throw std::invalid_argument("MeasurementEnsemble: negative prior");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("MeasurementEnsemble: priors must sum to 1");
}

bool ValidationCertificate::all_valid() const {
  return std::all_of(povm_valid.begin(), povm_valid.end(), [](bool b) { return b; });
}

bool ValidationCertificate::all_projective() const {
  return std::all_of(projective.begin(), projective.end(), [](bool b) { return b; });
}

ValidationCertificate validate(const MeasurementEnsemble& ens, double tol) {
  ValidationCertificate cert;
  for (const auto& povm : ens.measurements) {
    bool valid = true;
    ComplexMatrix sum(ens.dim, ens.dim);
    for (const auto& e : povm.elements) {
      sum += e;
      if (!is_hermitian(e, tol)) {
        valid = false;
        continue;
      }
      const auto eig = hermitian_eigen(e);
      const double min_eig = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
      cert.max_negative_eigenvalue = std::max(cert.max_negative_eigenvalue, -min_eig);
      if (min_eig < -tol) valid = false;
    }
    const double residual = (sum - ComplexMatrix::identity(ens.dim)).max_abs();
    cert.max_completeness_residual = std::max(cert.max_completeness_residual, residual);
    if (residual > tol) valid = false;
    cert.povm_valid.push_back(valid);

    bool projective = valid;
    for (std::size_t a = 0; a < povm.elements.size() && projective; ++a) {
      const auto& ea = povm.elements[a];
      if ((ea * ea - ea).max_abs() > tol) projective = false;
      const double tr = ea.trace().real();
      if (std::abs(tr - std::round(tr)) > tol * static_cast<double>(ens.dim))
        projective = false;
      for (std::size_t b = a + 1; b < povm.elements.size() && projective; ++b)
        if ((ea * povm.elements[b]).max_abs() > tol) projective = false;
    }
    cert.projective.push_back(projective);
  }
  return cert;
}

double outcome_probability(const MeasurementEnsemble& ens, std::size_t x, std::size_t a,
                           const ComplexMatrix& rho) {
  if (x >= ens.settings() || a >= ens.outcomes)
    throw std::invalid_argument("outcome_probability: index out of range");
  if (rho.rows() != ens.dim || rho.cols() != ens.dim)
    throw std::invalid_argument("outcome_probability: state dimension mismatch");
  if (std::abs(rho.trace().real() - 1.0) > 1e-9 || std::abs(rho.trace().imag()) > 1e-9 ||
      !is_psd(rho, 1e-9))
    throw std::invalid_argument("outcome_probability: invalid density matrix");
  const double p = (rho * ens.measurements[x].elements[a]).trace().real();
  return std::clamp(p, 0.0, 1.0);
}

MeasurementEnsemble conjugate_ensemble(const MeasurementEnsemble& ens, const ComplexMatrix& u) {
  if (u.rows() != ens.dim || u.cols() != ens.dim)
    throw std::invalid_argument("conjugate_ensemble: unitary dimension mismatch");
  if (!is_unitary(u, 1e-9)) throw std::invalid_argument("conjugate_ensemble: u is not unitary");
  const ComplexMatrix ud = u.adjoint();
  std::vector<Povm> rotated;
  rotated.reserve(ens.settings());
  for (const auto& povm : ens.measurements) {
    std::vector<ComplexMatrix> elems;
    elems.reserve(povm.elements.size());
    for (const auto& e : povm.elements) elems.push_back(u * e * ud);
    rotated.emplace_back(ens.dim, std::move(elems));
  }
  return MeasurementEnsemble(std::move(rotated), ens.priors);
}

}  // namespace mdisc
