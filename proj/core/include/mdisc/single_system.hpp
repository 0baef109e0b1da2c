#pragma once

#include <cstdint>

#include "mdisc/povm.hpp"

namespace mdisc {

/// Hypersphere angles for a pure state in dimension d: d-1 polar angles in
/// [0, pi/2] and d-1 phases in [0, 2*pi). Out-of-range inputs are clamped
/// (thetas) or wrapped (nus) at construction.
struct HypersphereParams {
  std::vector<double> thetas;
  std::vector<double> nus;

  HypersphereParams(std::vector<double> thetas, std::vector<double> nus);
  std::size_t dim() const { return thetas.size() + 1; }
};

/// |psi> = cos(t1)|0> + sum_k (prod_{i<=k} sin(t_i)) cos(t_{k+1}) e^{i nu_k} |k>
///       + (prod sin(t_i)) e^{i nu_{d-1}} |d-1>; unit norm for any angles.
CVec state_from_params(const HypersphereParams& p);

/// sum_a max_x p(x) <psi| M^a_x |psi>. Inner-max ties resolve to the lowest
/// setting index (only visible through argmax_map).
double score(const CVec& psi, const MeasurementEnsemble& ens);

/// The setting chosen by the inner max for each outcome, lowest index wins ties.
std::vector<std::size_t> score_argmax_map(const CVec& psi, const MeasurementEnsemble& ens);

struct OptimizerConfig {
  std::size_t restarts = 0;  // 0 = auto: 50 * (d - 1)
  std::size_t max_evals = 5000;
  double tol = 1e-9;  // simplex diameter
  std::uint64_t seed = 0;
};

struct DiscriminationReport {
  double value = 0.0;
  CVec best_state;
  std::vector<std::size_t> argmax_map;
  std::size_t restarts_used = 0;
  bool converged = false;
  /// max - min over the restart optima; a small spread is circumstantial
  /// evidence that the restarts agree on the global maximum.
  double spread = 0.0;
};

/// Multistart Nelder-Mead maximization of score() over pure states. Each
/// restart draws its start point from its own seed-derived stream, so the
/// report does not depend on evaluation order.
DiscriminationReport optimize_d(const MeasurementEnsemble& ens, const OptimizerConfig& cfg = {});

/// Exhaustive (theta, nu) scan for qubit ensembles; the independent check on
/// optimize_d at d = 2. Off the grid the score can exceed the scan maximum by
/// at most O(1/resolution).
double grid_oracle_d(const MeasurementEnsemble& ens, std::size_t resolution);

/// Single-system distinguishing probability of the trine pair at the state
/// sin(delta)|0> + cos(delta)|1>:
///   (3 + 2 cos 2*delta)/6           for delta in [0, pi/12],
///   (3 + cos 2*delta + sqrt(3) sin 2*delta)/6  for delta in [pi/12, pi/4].
double trine_d_closed_form(double delta);

}  // namespace mdisc
