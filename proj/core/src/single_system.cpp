#include "mdisc/single_system.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "mdisc/nelder_mead.hpp"
#include "mdisc/random.hpp"

namespace mdisc {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// The product-of-sines state for raw (unclamped) angles; always unit norm.
void build_state(std::span<const double> thetas, std::span<const double> nus, CVec& psi) {
  const std::size_t d = thetas.size() + 1;
  psi.resize(d);
  double sin_prod = 1.0;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    const double amp = sin_prod * std::cos(thetas[k]);
    psi[k] = k == 0 ? cplx(amp, 0.0) : std::polar(amp, nus[k - 1]);
    sin_prod *= std::sin(thetas[k]);
  }
  psi[d - 1] = std::polar(sin_prod, nus[d - 2]);
}

}  // namespace

HypersphereParams::HypersphereParams(std::vector<double> thetas_, std::vector<double> nus_)
    : thetas(std::move(thetas_)), nus(std::move(nus_)) {
  if (thetas.empty() || thetas.size() != nus.size())
    throw std::invalid_argument("HypersphereParams: need d-1 thetas and d-1 nus");
  for (double& t : thetas) t = std::clamp(t, 0.0, kHalfPi);
  for (double& v : nus) {
    v = std::fmod(v, kTwoPi);
    if (v < 0.0) v += kTwoPi;
  }
}

CVec state_from_params(const HypersphereParams& p) {
  CVec psi;
  build_state(p.thetas, p.nus, psi);
  return psi;
}

double score(const CVec& psi, const MeasurementEnsemble& ens) {
  if (psi.size() != ens.dim) throw std::invalid_argument("score: state dimension mismatch");
  double total = 0.0;
  for (std::size_t a = 0; a < ens.outcomes; ++a) {
    double best = -1.0;
    for (std::size_t x = 0; x < ens.settings(); ++x) {
      const double v = ens.priors[x] * ens.measurements[x].elements[a].quadratic_form(psi);
      if (v > best) best = v;
    }
    total += best;
  }
  return total;
}

std::vector<std::size_t> score_argmax_map(const CVec& psi, const MeasurementEnsemble& ens) {
  std::vector<std::size_t> map(ens.outcomes, 0);
  for (std::size_t a = 0; a < ens.outcomes; ++a) {
    double best = -1.0;
    for (std::size_t x = 0; x < ens.settings(); ++x) {
      const double v = ens.priors[x] * ens.measurements[x].elements[a].quadratic_form(psi);
      if (v > best) {
        best = v;
        map[a] = x;
      }
    }
  }
  return map;
}

namespace {

struct RestartBatch {
  double best_value = -1.0;
  std::size_t best_index = 0;
  std::vector<double> best_x;
  bool best_converged = false;
  double worst_value = 2.0;
};

// Merge is associative and commutative: larger value wins, ties go to the
// lower restart index, so the result is independent of scheduling.
void merge_into(RestartBatch& acc, const RestartBatch& other) {
  if (other.best_value > acc.best_value ||
      (other.best_value == acc.best_value && other.best_index < acc.best_index)) {
    acc.best_value = other.best_value;
    acc.best_index = other.best_index;
    acc.best_x = other.best_x;
    acc.best_converged = other.best_converged;
  }
  acc.worst_value = std::min(acc.worst_value, other.worst_value);
}

}  // namespace

DiscriminationReport optimize_d(const MeasurementEnsemble& ens, const OptimizerConfig& cfg) {
  const std::size_t d = ens.dim;
  if (d < 2) throw std::invalid_argument("optimize_d: dimension must be >= 2");
  const std::size_t n_params = 2 * (d - 1);
  const std::size_t restarts = cfg.restarts > 0 ? cfg.restarts : 50 * (d - 1);

  // Each restart draws from its own counter-derived stream, so splitting the
  // index range across threads cannot change any start point.
  const auto run_range = [&](std::size_t begin, std::size_t end) {
    RestartBatch batch;
    CVec scratch;
    const auto objective = [&](std::span<const double> x) {
      build_state(x.subspan(0, d - 1), x.subspan(d - 1), scratch);
      return -score(scratch, ens);
    };
    for (std::size_t r = begin; r < end; ++r) {
      Rng rng = Rng::substream(cfg.seed, r);
      std::vector<double> x0(n_params);
      for (std::size_t i = 0; i + 1 < d; ++i) x0[i] = rng.uniform(0.0, kHalfPi);
      for (std::size_t i = d - 1; i < n_params; ++i) x0[i] = rng.uniform(0.0, kTwoPi);
      const auto local =
          nelder_mead_minimize(objective, std::move(x0), 0.3, cfg.tol, cfg.max_evals);
      RestartBatch single;
      single.best_value = -local.value;
      single.best_index = r;
      single.best_x = local.x;
      single.best_converged = local.converged;
      single.worst_value = -local.value;
      merge_into(batch, single);
    }
    return batch;
  };

  const std::size_t hw = std::max<std::size_t>(std::thread::hardware_concurrency(), 1);
  const std::size_t workers = std::min({hw, restarts, std::size_t{8}});
  RestartBatch result;
  if (workers <= 1) {
    result = run_range(0, restarts);
  } else {
    std::vector<std::future<RestartBatch>> futures;
    futures.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = restarts * w / workers;
      const std::size_t end = restarts * (w + 1) / workers;
      futures.push_back(std::async(std::launch::async, run_range, begin, end));
    }
    for (auto& f : futures) merge_into(result, f.get());
  }

  DiscriminationReport report;
  report.restarts_used = restarts;
  report.value = result.best_value;
  report.converged = result.best_converged;
  report.spread = result.best_value - result.worst_value;
  build_state(std::span<const double>(result.best_x).subspan(0, d - 1),
              std::span<const double>(result.best_x).subspan(d - 1), report.best_state);
  normalize(report.best_state);
  report.argmax_map = score_argmax_map(report.best_state, ens);
  return report;
}

double grid_oracle_d(const MeasurementEnsemble& ens, std::size_t resolution) {
  if (ens.dim != 2) throw std::invalid_argument("grid_oracle_d: only qubit ensembles");
  if (resolution < 2) throw std::invalid_argument("grid_oracle_d: resolution too small");
  double best = 0.0;
  CVec psi(2);
  for (std::size_t i = 0; i < resolution; ++i) {
    const double theta = kHalfPi * static_cast<double>(i) / static_cast<double>(resolution - 1);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    psi[0] = c;
    for (std::size_t j = 0; j < resolution; ++j) {
      const double nu = kTwoPi * static_cast<double>(j) / static_cast<double>(resolution);
      psi[1] = std::polar(s, nu);
      best = std::max(best, score(psi, ens));
    }
  }
  return best;
}

double trine_d_closed_form(double delta) {
  if (delta < 0.0 || delta > std::numbers::pi / 4.0)
    throw std::domain_error("trine_d_closed_form: delta must lie in [0, pi/4]");
  const double c = std::cos(2.0 * delta);
  if (delta <= std::numbers::pi / 12.0) return (3.0 + 2.0 * c) / 6.0;
  return (3.0 + c + std::sqrt(3.0) * std::sin(2.0 * delta)) / 6.0;
}

}  // namespace mdisc
