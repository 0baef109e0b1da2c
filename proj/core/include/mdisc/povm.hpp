#pragma once

#include <vector>

#include "mdisc/complex_matrix.hpp"

namespace mdisc {

/// Ordered list of measurement operators, one per outcome. Construction only
/// checks shape (square elements of a common dimension); whether the elements
/// actually form a POVM is the job of validate().
struct Povm {
  std::size_t dim = 0;
  std::vector<ComplexMatrix> elements;

  Povm() = default;
  Povm(std::size_t dim, std::vector<ComplexMatrix> elements);
  std::size_t outcomes() const { return elements.size(); }
};

/// A set of POVMs indexed by the measurement setting x, sampled with prior
/// p(x). All settings must share the dimension and the outcome count; ragged
/// sets are rejected at construction.
struct MeasurementEnsemble {
  std::size_t dim = 0;
  std::size_t outcomes = 0;
  std::vector<Povm> measurements;
  std::vector<double> priors;

  MeasurementEnsemble() = default;
  MeasurementEnsemble(std::vector<Povm> measurements, std::vector<double> priors);
  std::size_t settings() const { return measurements.size(); }
};

struct ValidationCertificate {
  std::vector<bool> povm_valid;
  std::vector<bool> projective;
  double max_completeness_residual = 0.0;
  double max_negative_eigenvalue = 0.0;

  bool all_valid() const;
  bool all_projective() const;
};

/// Check every POVM of the ensemble: elements Hermitian and PSD within tol,
/// elements summing to the identity within tol (max-entry norm). A POVM is
/// flagged projective when each element is idempotent, distinct elements are
/// mutually orthogonal, and element traces sit at integers.
ValidationCertificate validate(const MeasurementEnsemble& ens, double tol = 1e-9);

/// p(a|x, rho) = Tr(rho M^a_x), clamped to [0, 1]. rho must be a valid
/// density matrix (Hermitian, PSD within 1e-9, unit trace).
double outcome_probability(const MeasurementEnsemble& ens, std::size_t x, std::size_t a,
                           const ComplexMatrix& rho);

/// Map every element E -> u E u^dagger; priors are unchanged. u must be
/// unitary within 1e-9.
MeasurementEnsemble conjugate_ensemble(const MeasurementEnsemble& ens, const ComplexMatrix& u);

}  // namespace mdisc
