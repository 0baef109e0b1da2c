#pragma once

#include <cstdint>

#include "mdisc/complex_matrix.hpp"

namespace mdisc {

/// SplitMix64 generator. One 64-bit seed fans out into independent streams
/// through substream(); restart r of a multistart run reads stream r, so
/// results do not depend on scheduling order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller.
  double gaussian();
  cplx gaussian_cplx();

  static Rng substream(std::uint64_t seed, std::uint64_t counter);

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

CVec random_state(std::size_t dim, Rng& rng);
ComplexMatrix random_matrix(std::size_t dim, Rng& rng);
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);
ComplexMatrix random_psd(std::size_t dim, Rng& rng);
/// Random density matrix (PSD, unit trace).
ComplexMatrix random_density(std::size_t dim, Rng& rng);
/// Haar-like random orthonormal columns via Gram-Schmidt on a Ginibre sample.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

}  // namespace mdisc
