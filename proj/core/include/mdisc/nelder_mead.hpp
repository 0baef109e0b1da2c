#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace mdisc {

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Downhill simplex minimization with the classic reflection / expansion /
/// contraction / shrink moves. Deliberately derivative-free: the objectives
/// here carry max() kinks that gradient methods trip over. Stops when the
/// simplex diameter falls below diameter_tol or the evaluation budget runs
/// out.
NelderMeadResult nelder_mead_minimize(const std::function<double(std::span<const double>)>& f,
                                      std::vector<double> x0, double initial_step,
                                      double diameter_tol, std::size_t max_evals);

}  // namespace mdisc
