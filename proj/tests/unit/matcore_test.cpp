#include <doctest.h>

#include <cmath>

#include "mdisc/complex_matrix.hpp"
#include "mdisc/linalg.hpp"
#include "mdisc/random.hpp"

using namespace mdisc;

namespace {

const ComplexMatrix kSigmaX = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
const ComplexMatrix kSigmaZ = ComplexMatrix::from_rows({{1, 0}, {0, -1}});

CVec max_entangled_ket(std::size_t d) {
  CVec phi(d * d);
  for (std::size_t i = 0; i < d; ++i) phi[i * d + i] = 1.0 / std::sqrt(double(d));
  return phi;
}

}  // namespace

TEST_SUITE("matcore") {

TEST_CASE("kron identity blocks") {
  const auto i2 = ComplexMatrix::identity(2);
  CHECK(kron(i2, i2) == ComplexMatrix::identity(4));

  const auto zi = kron(kSigmaZ, i2);
  const auto expected = ComplexMatrix::from_rows(
      {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}});
  CHECK((zi - expected).max_abs() == 0.0);
}

TEST_CASE("kron against the transpose trick on phi+") {
  // (X (x) Z)|phi+> computed two ways: through kron, and via 1 (x) Z X^T.
  const CVec phi = max_entangled_ket(2);
  const CVec lhs = matvec(kron(kSigmaX, kSigmaZ), phi);
  const CVec rhs = matvec(kron(ComplexMatrix::identity(2), kSigmaZ * kSigmaX.transpose()), phi);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(lhs[i] - rhs[i]) < 1e-15);
}

TEST_CASE("fact 1 holds for random operator pairs") {
  for (std::size_t d : {2, 3, 4}) {
    Rng rng(17 + d);
    const CVec phi = max_entangled_ket(d);
    const ComplexMatrix eye = ComplexMatrix::identity(d);
    for (int trial = 0; trial < 100; ++trial) {
      const ComplexMatrix a = random_matrix(d, rng);
      const ComplexMatrix b = random_matrix(d, rng);
      const CVec lhs = matvec(kron(a, b), phi);
      const CVec rhs = matvec(kron(eye, b * a.transpose()), phi);
      for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(std::abs(lhs[i] - rhs[i]) < 1e-10);
    }
  }
}

TEST_CASE("partial trace of a product factorizes") {
  Rng rng(3);
  const ComplexMatrix rho = random_psd(2, rng);
  const ComplexMatrix sigma = random_psd(3, rng);
  const ComplexMatrix traced = partial_trace_a(kron(rho, sigma), 2, 3);
  ComplexMatrix expected = sigma;
  expected *= rho.trace();
  CHECK((traced - expected).max_abs() < 1e-12);
}

TEST_CASE("partial trace of phi+ is maximally mixed") {
  const CVec phi = max_entangled_ket(2);
  const ComplexMatrix traced = partial_trace_a(outer(phi, phi), 2, 2);
  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= 0.5;
  CHECK((traced - half).max_abs() < 1e-15);
}

TEST_CASE("partial trace matches the index-loop oracle") {
  Rng rng(9);
  const ComplexMatrix rho = random_psd(4, rng);
  const ComplexMatrix traced = partial_trace_a(rho, 2, 2);
  // Independent oracle: explicit 4-index summation.
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t jp = 0; jp < 2; ++jp) {
      cplx s = 0.0;
      for (std::size_t i = 0; i < 2; ++i) s += rho(i * 2 + j, i * 2 + jp);
      CHECK(std::abs(traced(j, jp) - s) < 1e-14);
    }
  CHECK(std::abs(traced.trace() - rho.trace()) < 1e-12);
}

TEST_CASE("partial trace rejects bad dimensions") {
  CHECK_THROWS_AS(partial_trace_a(ComplexMatrix::identity(5), 2, 2), std::invalid_argument);
}

TEST_CASE("hermitian_eigen on diagonal input") {
  const auto m = ComplexMatrix::from_rows({{3, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  const auto eig = hermitian_eigen(m);
  CHECK(eig.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eig.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(eig.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eigen on sigma_x") {
  const auto eig = hermitian_eigen(kSigmaX);
  CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("hermitian_eigen reconstruction and orthonormality") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix m = random_hermitian(4, rng);
    const auto eig = hermitian_eigen(m);

    const std::size_t n = 4;
    ComplexMatrix rebuilt(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          rebuilt(i, j) += eig.eigenvalues[k] * eig.eigenvectors(i, k) *
                           std::conj(eig.eigenvectors(j, k));
    CHECK((rebuilt - m).max_abs() < 1e-10);

    const ComplexMatrix gram = eig.eigenvectors.adjoint() * eig.eigenvectors;
    CHECK((gram - ComplexMatrix::identity(n)).max_abs() < 1e-10);

    double sum = 0.0;
    for (double v : eig.eigenvalues) sum += v;
    CHECK(std::abs(sum - m.trace().real()) < 1e-10);
  }
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input") {
  CHECK_THROWS_AS(hermitian_eigen(ComplexMatrix::from_rows({{0, 1}, {0, 0}})),
                  std::invalid_argument);
}

TEST_CASE("trace_norm basics") {
  CHECK(trace_norm(kSigmaZ) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(trace_norm(ComplexMatrix(3, 3)) == 0.0);

  // |0><0| - |+><+| has eigenvalues +-1/sqrt(2).
  const CVec plus = {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
  const CVec zero = {1.0, 0.0};
  const ComplexMatrix diff = outer(zero, zero) - outer(plus, plus);
  CHECK(trace_norm(diff) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(trace_norm(ComplexMatrix::from_rows({{0, 1}, {0, 0}})), std::invalid_argument);
}

TEST_CASE("trace_norm is a norm on random Hermitian samples") {
  Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_hermitian(3, rng);
    const ComplexMatrix b = random_hermitian(3, rng);
    const double na = trace_norm(a);
    const double nb = trace_norm(b);
    CHECK(trace_norm(a + b) <= na + nb + 1e-9);
    ComplexMatrix scaled = a;
    scaled *= -2.5;
    CHECK(trace_norm(scaled) == doctest::Approx(2.5 * na).epsilon(1e-9));
  }
}

TEST_CASE("is_psd") {
  CHECK(is_psd(ComplexMatrix::identity(3), 1e-9));
  CHECK_FALSE(is_psd(ComplexMatrix::from_rows({{1, 0}, {0, -0.1}}), 1e-9));
  // (2/3)|v0><v0| from the trine construction.
  const CVec v0 = {0.5, std::sqrt(3.0) / 2.0};
  ComplexMatrix e = outer(v0, v0);
  e *= 2.0 / 3.0;
  CHECK(is_psd(e, 1e-9));
  // Non-Hermitian input is simply "not PSD".
  CHECK_FALSE(is_psd(ComplexMatrix::from_rows({{0, 1}, {0, 0}}), 1e-9));
}

TEST_CASE("is_unitary") {
  CHECK(is_unitary(kSigmaX * kSigmaZ, 1e-12));
  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= 0.5;
  CHECK_FALSE(is_unitary(half, 1e-9));
  CHECK_THROWS_AS(is_unitary(ComplexMatrix(2, 3), 1e-9), std::invalid_argument);
}

TEST_CASE("quadratic form matches explicit evaluation") {
  Rng rng(4);
  const ComplexMatrix m = random_hermitian(3, rng);
  const CVec psi = random_state(3, rng);
  const cplx direct = inner(psi, matvec(m, psi));
  CHECK(std::abs(m.quadratic_form(psi) - direct.real()) < 1e-13);
}

}  // TEST_SUITE
