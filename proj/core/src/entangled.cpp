#include "mdisc/entangled.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mdisc/linalg.hpp"

namespace mdisc {

namespace {

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0, 1}, {1, 0}}); }
ComplexMatrix pauli_z() { return ComplexMatrix::from_rows({{1, 0}, {0, -1}}); }

struct MinErrorResult {
  double value = 0.0;
  Povm povm;
  std::size_t iterations = 0;
  double gap = 0.0;
  bool converged = true;
};

double primal_value(const std::vector<ComplexMatrix>& sigmas,
                    const std::vector<ComplexMatrix>& povm) {
  double v = 0.0;
  for (std::size_t x = 0; x < sigmas.size(); ++x) v += (sigmas[x] * povm[x]).trace().real();
  return v;
}

// Dual-feasibility repair: Y0 = herm(sum sigma_x N_x) plus the smallest
// multiple of the identity making Y >= sigma_x for all x. Tr(Y) upper-bounds
// the optimum, so Tr(Y) - value is a certified gap.
double dual_gap(const std::vector<ComplexMatrix>& sigmas, const std::vector<ComplexMatrix>& povm,
                double value) {
  const std::size_t dim = sigmas.front().rows();
  ComplexMatrix k(dim, dim);
  for (std::size_t x = 0; x < sigmas.size(); ++x) k += sigmas[x] * povm[x];
  ComplexMatrix y0 = k + k.adjoint();
  y0 *= 0.5;
  double lift = 0.0;
  for (const auto& s : sigmas) {
    const auto eig = hermitian_eigen(s - y0);
    lift = std::max(lift, eig.eigenvalues.back());
  }
  return y0.trace().real() + static_cast<double>(dim) * lift - value;
}

MinErrorResult solve_min_error(const std::vector<ComplexMatrix>& sigmas,
                               const BSolverConfig& cfg) {
  const std::size_t n = sigmas.size();
  const std::size_t dim = sigmas.front().rows();
  const double share = 1.0 / static_cast<double>(n);

  // Pretty-good measurement start; the kernel of the total operator carries
  // no probability mass, so completing it uniformly keeps completeness.
  ComplexMatrix total(dim, dim);
  for (const auto& s : sigmas) total += s;
  const ComplexMatrix g0 = inv_sqrt_psd(total, cfg.spectral_floor);
  const ComplexMatrix k0 = kernel_projector(total, cfg.spectral_floor);
  std::vector<ComplexMatrix> povm(n);
  for (std::size_t x = 0; x < n; ++x) povm[x] = g0 * sigmas[x] * g0 + share * k0;

  MinErrorResult result;
  result.value = primal_value(sigmas, povm);
  result.gap = dual_gap(sigmas, povm, result.value);

  while (result.gap > cfg.residual_tol && result.iterations < cfg.max_iterations) {
    ComplexMatrix t(dim, dim);
    for (std::size_t x = 0; x < n; ++x) t += sigmas[x] * povm[x] * sigmas[x];
    const ComplexMatrix g = inv_sqrt_psd(t, cfg.spectral_floor);
    const ComplexMatrix kp = kernel_projector(t, cfg.spectral_floor);
    for (std::size_t x = 0; x < n; ++x) povm[x] = g * sigmas[x] * povm[x] * sigmas[x] * g + share * kp;

    // Undo completeness drift before evaluating.
    ComplexMatrix r(dim, dim);
    for (const auto& e : povm) r += e;
    const ComplexMatrix rg = inv_sqrt_psd(r, cfg.spectral_floor);
    const ComplexMatrix rk = kernel_projector(r, cfg.spectral_floor);
    for (auto& e : povm) e = rg * e * rg + share * rk;

    result.value = primal_value(sigmas, povm);
    result.gap = dual_gap(sigmas, povm, result.value);
    ++result.iterations;
  }
  result.converged = result.gap <= cfg.residual_tol;
  result.povm = Povm(dim, std::move(povm));
  return result;
}

}  // namespace

std::string to_string(BMethod m) {
  switch (m) {
    case BMethod::exact_bob: return "exact-bob";
    case BMethod::helstrom: return "helstrom";
    case BMethod::iterative: return "iterative";
  }
  return "unknown";
}

BipartiteDensity::BipartiteDensity(std::size_t dim_a_, std::size_t dim_b_, ComplexMatrix matrix_)
    : dim_a(dim_a_), dim_b(dim_b_), matrix(std::move(matrix_)) {
  if (!matrix.is_square() || matrix.rows() != dim_a * dim_b)
    throw std::invalid_argument("BipartiteDensity: dimension mismatch");
  if (!is_hermitian(matrix, 1e-9)) throw std::invalid_argument("BipartiteDensity: not Hermitian");
  if (!is_psd(matrix, 1e-9)) throw std::invalid_argument("BipartiteDensity: not PSD");
  if (std::abs(matrix.trace().real() - 1.0) > 1e-10)
    throw std::invalid_argument("BipartiteDensity: trace must equal 1");
}

BipartiteDensity max_entangled(std::size_t d) {
  if (d < 2) throw std::invalid_argument("max_entangled: d must be >= 2");
  CVec phi(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) phi[i * d + i] = amp;
  return BipartiteDensity(d, d, outer(phi, phi));
}

BipartiteDensity werner_state(double p) {
  if (p < 0.0 || p > 1.0) throw std::domain_error("werner_state: p must lie in [0, 1]");
  ComplexMatrix m = max_entangled(2).matrix;
  m *= p;
  ComplexMatrix iso = ComplexMatrix::identity(4);
  iso *= (1.0 - p) / 4.0;
  m += iso;
  return BipartiteDensity(2, 2, std::move(m));
}

BipartiteDensity pure_state_density(std::size_t dim_a, std::size_t dim_b, const CVec& psi) {
  if (psi.size() != dim_a * dim_b)
    throw std::invalid_argument("pure_state_density: vector length mismatch");
  CVec unit = psi;
  normalize(unit);
  return BipartiteDensity(dim_a, dim_b, outer(unit, unit));
}

BipartiteDensity two_qubit_pure(double alpha) {
  return pure_state_density(2, 2, {std::sin(alpha), 0.0, 0.0, std::cos(alpha)});
}

Assemblage assemblage_of(const BipartiteDensity& rho, const MeasurementEnsemble& ens) {
  if (rho.dim_a != ens.dim)
    throw std::invalid_argument("assemblage_of: ensemble does not act on subsystem A");
  Assemblage out;
  out.dim_b = rho.dim_b;
  out.ops.resize(ens.outcomes);
  const ComplexMatrix eye_b = ComplexMatrix::identity(rho.dim_b);
  for (std::size_t a = 0; a < ens.outcomes; ++a) {
    out.ops[a].reserve(ens.settings());
    for (std::size_t x = 0; x < ens.settings(); ++x) {
      ComplexMatrix big = kron(ens.measurements[x].elements[a], eye_b) * rho.matrix;
      ComplexMatrix sigma = partial_trace_a(big, rho.dim_a, rho.dim_b);
      sigma *= ens.priors[x];
      // Exactly Hermitian by construction up to roundoff; symmetrize so the
      // downstream eigensolves never reject it.
      ComplexMatrix herm = sigma + sigma.adjoint();
      herm *= 0.5;
      out.ops[a].push_back(std::move(herm));
    }
  }
  return out;
}

BValueReport b_value_with_bob(const BipartiteDensity& rho, const MeasurementEnsemble& ens,
                              const std::vector<Povm>& bob) {
  if (bob.size() != ens.outcomes)
    throw std::invalid_argument("b_value_with_bob: need one Bob POVM per Alice outcome");
  for (const auto& povm : bob) {
    if (povm.dim != rho.dim_b)
      throw std::invalid_argument("b_value_with_bob: Bob POVM dimension mismatch");
    if (povm.outcomes() != ens.settings())
      throw std::invalid_argument("b_value_with_bob: Bob POVM must have one outcome per setting");
  }
  const Assemblage assemblage = assemblage_of(rho, ens);
  double value = 0.0;
  for (std::size_t a = 0; a < ens.outcomes; ++a)
    for (std::size_t x = 0; x < ens.settings(); ++x)
      value += (assemblage.ops[a][x] * bob[a].elements[x]).trace().real();
  BValueReport report;
  report.value = value;
  report.method = BMethod::exact_bob;
  report.bob_povms = bob;
  return report;
}

HelstromResult helstrom_pair(const ComplexMatrix& s0, const ComplexMatrix& s1) {
  if (!is_psd(s0, 1e-9) || !is_psd(s1, 1e-9))
    throw std::invalid_argument("helstrom_pair: hypotheses must be PSD");
  const ComplexMatrix diff = s0 - s1;
  const auto eig = hermitian_eigen(diff);
  const std::size_t dim = s0.rows();
  ComplexMatrix positive(dim, dim);
  double tn = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    tn += std::abs(eig.eigenvalues[k]);
    if (eig.eigenvalues[k] < 0.0) continue;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        positive(i, j) += eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
  }
  HelstromResult result;
  result.value = 0.5 * ((s0 + s1).trace().real() + tn);
  result.bob = Povm(dim, {positive, ComplexMatrix::identity(dim) - positive});
  return result;
}

BValueReport b_value_optimal(const BipartiteDensity& rho, const MeasurementEnsemble& ens,
                             const BSolverConfig& cfg) {
  const Assemblage assemblage = assemblage_of(rho, ens);
  const std::size_t n = ens.settings();
  BValueReport report;
  std::vector<Povm> bob;
  bob.reserve(ens.outcomes);

  if (n == 1) {
    report.method = BMethod::exact_bob;
    double value = 0.0;
    for (std::size_t a = 0; a < ens.outcomes; ++a) {
      value += assemblage.ops[a][0].trace().real();
      bob.emplace_back(rho.dim_b, std::vector<ComplexMatrix>{ComplexMatrix::identity(rho.dim_b)});
    }
    report.value = value;
    report.bob_povms = std::move(bob);
    return report;
  }

  if (n == 2) {
    report.method = BMethod::helstrom;
    double value = 0.0;
    for (std::size_t a = 0; a < ens.outcomes; ++a) {
      auto h = helstrom_pair(assemblage.ops[a][0], assemblage.ops[a][1]);
      value += h.value;
      bob.push_back(std::move(h.bob));
    }
    report.value = value;
    report.bob_povms = std::move(bob);
    return report;
  }

  report.method = BMethod::iterative;
  double value = 0.0;
  double gap = 0.0;
  std::size_t iterations = 0;
  bool converged = true;
  for (std::size_t a = 0; a < ens.outcomes; ++a) {
    auto r = solve_min_error(assemblage.ops[a], cfg);
    value += r.value;
    gap += r.gap;
    iterations = std::max(iterations, r.iterations);
    converged = converged && r.converged;
    bob.push_back(std::move(r.povm));
  }
  report.value = value;
  report.dual_gap = gap;
  report.convergence = BConvergence{iterations, gap, converged};
  report.bob_povms = std::move(bob);
  return report;
}

double two_qubit_b_closed(double alpha) {
  if (!(alpha > 0.0 && alpha <= std::numbers::pi / 4.0))
    throw std::domain_error("two_qubit_b_closed: alpha must lie in (0, pi/4]");
  const double c = std::sin(2.0 * alpha);
  return (4.0 + std::sqrt(1.0 + 3.0 * c * c)) / 6.0;
}

std::vector<Povm> two_qubit_optimal_bob(double alpha) {
  if (!(alpha > 0.0 && alpha <= std::numbers::pi / 4.0))
    throw std::domain_error("two_qubit_optimal_bob: alpha must lie in (0, pi/4]");
  const double c = std::sin(2.0 * alpha);
  const double denom = std::sqrt(1.0 + 3.0 * c * c);
  const double st = std::sqrt(3.0) * c / denom;
  const double ct = 1.0 / denom;
  const ComplexMatrix sx = pauli_x();
  const ComplexMatrix sz = pauli_z();

  ComplexMatrix o0 = st * sx - ct * sz;
  ComplexMatrix o1 = (-st) * sx - ct * sz;
  const std::array<ComplexMatrix, 3> observables = {std::move(o0), std::move(o1), sz};

  std::vector<Povm> bob;
  bob.reserve(3);
  for (const auto& obs : observables) {
    ComplexMatrix plus = ComplexMatrix::identity(2) + obs;
    plus *= 0.5;
    bob.emplace_back(2, std::vector<ComplexMatrix>{plus, ComplexMatrix::identity(2) - plus});
  }
  return bob;
}

SteeringVerdict steering_witness(const BipartiteDensity& rho, const MeasurementEnsemble& ens,
                                 double d_value, const WitnessConfig& cfg) {
  if (rho.dim_a != ens.dim)
    throw std::invalid_argument("steering_witness: ensemble does not act on subsystem A");
  SteeringVerdict verdict;
  verdict.b_report = b_value_optimal(rho, ens, cfg.solver);
  verdict.b_value = verdict.b_report.value;
  verdict.d_value = d_value;
  verdict.gap = verdict.b_value - d_value;
  verdict.margin = cfg.margin;
  verdict.steerable_witnessed = verdict.gap > cfg.margin;
  return verdict;
}

}  // namespace mdisc
