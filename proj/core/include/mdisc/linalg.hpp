#pragma once

#include "mdisc/complex_matrix.hpp"

namespace mdisc {

struct HermitianEigenResult {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unit-norm columns, same order
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations with
/// complex Givens planes. Robust and plenty fast for the d <= 16 operators
/// this library works with. The input is symmetrized internally; inputs that
/// are not Hermitian within 1e-10 (relative to the max entry) are rejected.
HermitianEigenResult hermitian_eigen(const ComplexMatrix& m);

/// Sum of absolute eigenvalues. Hermitian input only.
double trace_norm(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = 1e-9);

/// True iff m is Hermitian within tol and its smallest eigenvalue is >= -tol.
/// Non-Hermitian input returns false rather than throwing.
bool is_psd(const ComplexMatrix& m, double tol = 1e-9);

/// True iff ||m^dagger m - 1||_max <= tol. Throws on non-square input.
bool is_unitary(const ComplexMatrix& m, double tol = 1e-9);

/// Moore-Penrose style inverse square root of a PSD matrix: eigenvalues at or
/// below `floor` are treated as exact zeros and excluded.
ComplexMatrix inv_sqrt_psd(const ComplexMatrix& m, double floor = 1e-12);

/// Projector onto the span of eigenvectors with eigenvalue <= floor.
ComplexMatrix kernel_projector(const ComplexMatrix& m, double floor = 1e-12);

}  // namespace mdisc
