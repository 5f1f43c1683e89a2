#pragma once

#include <functional>
#include <vector>

namespace pmlopt {

struct SimplexConfig {
  double reflection_coeff = 1.0;
  double expansion_coeff = 2.0;
  double contraction_coeff = 0.5;
  double shrink_coeff = 0.5;
  int max_evals = 2000;
  double tol_x = 1e-4;
  double tol_f = 1e-4;
};

enum class Termination { Converged, MaxEvals };

struct OptResult {
  std::vector<double> best_point;
  double best_value = 0.0;
  int iterations = 0;
  int evals = 0;
  Termination termination = Termination::Converged;
};

using Objective = std::function<double(const std::vector<double>&)>;

// Called once per completed iteration with the running best value; lets
// callers log or assert on the trajectory.
using IterationObserver = std::function<void(int iteration, double best_value)>;

// Start simplex around x0: vertex 0 is x0 itself, vertex k bumps coordinate
// k by +5% of its value (or by +0.00025 when that coordinate is zero).
std::vector<std::vector<double>> initial_simplex(const std::vector<double>& x0);

// Downhill simplex minimization with the standard reflect / expand /
// contract / shrink moves and stable ordering. The objective must be total:
// callers map their failures to a large finite penalty (1e6 by convention).
// Terminates Converged when both the function spread and the vertex
// coordinate spread fall under the relative tolerances, MaxEvals when the
// evaluation budget is exhausted at the top of an iteration (so the total
// never exceeds max_evals + n + 1).
OptResult nelder_mead(const Objective& f, const std::vector<double>& x0,
                      const SimplexConfig& config = {},
                      const IterationObserver& observer = {});

}  // namespace pmlopt
