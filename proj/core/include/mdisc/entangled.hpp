#pragma once

#include <optional>
#include <string>

#include "mdisc/povm.hpp"

namespace mdisc {

/// Density operator on a dim_A * dim_B space, subsystem A first (slow index).
/// Construction checks Hermiticity and positivity within 1e-9 and unit trace
/// within 1e-10.
struct BipartiteDensity {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  ComplexMatrix matrix;

  BipartiteDensity() = default;
  BipartiteDensity(std::size_t dim_a, std::size_t dim_b, ComplexMatrix matrix);
};

/// Subnormalized conditional operators sigma[a][x] = p(x) Tr_A[(M^a_x x 1) rho]
/// on Bob's space; their traces sum to 1. Discriminating the x-index within
/// each outcome a is exactly the entanglement-assisted guessing problem.
struct Assemblage {
  std::size_t dim_b = 0;
  std::vector<std::vector<ComplexMatrix>> ops;  // ops[a][x]

  std::size_t outcomes() const { return ops.size(); }
  std::size_t settings() const { return ops.empty() ? 0 : ops.front().size(); }
};

enum class BMethod { exact_bob, helstrom, iterative };
std::string to_string(BMethod m);

struct BConvergence {
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = true;
};

struct BValueReport {
  double value = 0.0;
  BMethod method = BMethod::exact_bob;
  std::optional<std::vector<Povm>> bob_povms;  // one POVM per Alice outcome
  BConvergence convergence;
  /// Tr(Y) - value for the constructed dual-feasible Y; zero for the exact
  /// routes.
  double dual_gap = 0.0;
};

/// |phi+><phi+| with |phi+> = (1/sqrt d) sum_i |ii>.
BipartiteDensity max_entangled(std::size_t d);

/// p |phi+><phi+| + (1-p)/4 on two qubits.
BipartiteDensity werner_state(double p);

BipartiteDensity pure_state_density(std::size_t dim_a, std::size_t dim_b, const CVec& psi);

/// Schmidt-angle state sin(alpha)|00> + cos(alpha)|11>.
BipartiteDensity two_qubit_pure(double alpha);

Assemblage assemblage_of(const BipartiteDensity& rho, const MeasurementEnsemble& ens);

/// Exact value of the entanglement-assisted distinguishing probability for a
/// fixed choice of Bob measurements (one n-outcome POVM per Alice outcome).
BValueReport b_value_with_bob(const BipartiteDensity& rho, const MeasurementEnsemble& ens,
                              const std::vector<Povm>& bob);

struct HelstromResult {
  double value = 0.0;
  Povm bob;  // two-outcome: positive / complementary eigenspace of s0 - s1
};

/// Optimal two-hypothesis minimum-error success value for subnormalized PSD
/// operators: (Tr(s0 + s1) + ||s0 - s1||_1) / 2.
HelstromResult helstrom_pair(const ComplexMatrix& s0, const ComplexMatrix& s1);

struct BSolverConfig {
  double residual_tol = 1e-8;
  std::size_t max_iterations = 10000;
  double spectral_floor = 1e-12;
};

/// Maximum over Bob's measurements of the distinguishing probability. Two
/// settings are solved exactly through helstrom_pair; more settings run a
/// fixed-point iteration seeded with the pretty-good measurement, and the
/// reported dual_gap bounds the distance to the true optimum from above.
BValueReport b_value_optimal(const BipartiteDensity& rho, const MeasurementEnsemble& ens,
                             const BSolverConfig& cfg = {});

/// (4 + sqrt(1 + 3 C^2)) / 6 with concurrence C = sin(2*alpha); the optimal
/// value for the trine pair on sin(alpha)|00> + cos(alpha)|11>, alpha in
/// (0, pi/4].
double two_qubit_b_closed(double alpha);

/// Bob's optimal projective measurements for that task, one two-outcome POVM
/// per trine outcome, built from the +-1 eigenprojectors of
///   sin(t) sx - cos(t) sz,  -sin(t) sx - cos(t) sz,  sz,
/// with sin(t) = sqrt(3) C / sqrt(1 + 3 C^2).
std::vector<Povm> two_qubit_optimal_bob(double alpha);

struct WitnessConfig {
  double margin = 1e-4;
  BSolverConfig solver;
};

struct SteeringVerdict {
  bool steerable_witnessed = false;
  double b_value = 0.0;
  double d_value = 0.0;
  double gap = 0.0;  // b_value - d_value
  double margin = 0.0;
  BValueReport b_report;
};

/// Fires when the computed B exceeds d_value by more than the margin; any
/// violation of B <= D certifies steerability of rho by Bob. A non-violation
/// stays inconclusive (the witness is one-directional).
SteeringVerdict steering_witness(const BipartiteDensity& rho, const MeasurementEnsemble& ens,
                                 double d_value, const WitnessConfig& cfg = {});

}  // namespace mdisc
