#include "mdisc/random.hpp"

#include <cmath>
#include <numbers>

namespace mdisc {

namespace {
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace

std::uint64_t Rng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix(state_);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  have_spare_ = true;
  return r * std::cos(phi);
}

cplx Rng::gaussian_cplx() { return {gaussian(), gaussian()}; }

Rng Rng::substream(std::uint64_t seed, std::uint64_t counter) {
  return Rng(mix(seed + 0x9e3779b97f4a7c15ULL * (counter + 1)));
}

CVec random_state(std::size_t dim, Rng& rng) {
  CVec v(dim);
  for (auto& x : v) x = rng.gaussian_cplx();
  normalize(v);
  return v;
}

ComplexMatrix random_matrix(std::size_t dim, Rng& rng) {
  ComplexMatrix m(dim, dim);
  for (auto& x : m.data()) x = rng.gaussian_cplx();
  return m;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  ComplexMatrix g = random_matrix(dim, rng);
  ComplexMatrix h = g.adjoint();
  h += g;
  h *= 0.5;
  return h;
}

ComplexMatrix random_psd(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = random_matrix(dim, rng);
  return g.adjoint() * g;
}

ComplexMatrix random_density(std::size_t dim, Rng& rng) {
  ComplexMatrix p = random_psd(dim, rng);
  p *= 1.0 / p.trace().real();
  return p;
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  ComplexMatrix g = random_matrix(dim, rng);
  // Modified Gram-Schmidt on columns.
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t prev = 0; prev < k; ++prev) {
      cplx proj = 0.0;
      for (std::size_t i = 0; i < dim; ++i) proj += std::conj(g(i, prev)) * g(i, k);
      for (std::size_t i = 0; i < dim; ++i) g(i, k) -= proj * g(i, prev);
    }
    double n = 0.0;
    for (std::size_t i = 0; i < dim; ++i) n += std::norm(g(i, k));
    n = std::sqrt(n);
    for (std::size_t i = 0; i < dim; ++i) g(i, k) /= n;
  }
  return g;
}

}  // namespace mdisc
