#pragma once

#include <vector>

#include "pmlopt/numerics.hpp"
#include "pmlopt/profiles.hpp"
#include "pmlopt/reflectivity.hpp"

namespace pmlopt {

struct ObjectiveSpec {
  GridSpec grid;
  QuadratureRule quad;  // nodes strictly inside (0, pi/2)
};

// Quadrature rule for averaging |R| over incidence angles (0, pi/2): an
// n-point Gauss-Legendre rule pushed through a sinh grading that clusters
// nodes toward grazing incidence, where |R| has a steep boundary layer.
// Weights stay positive and sum to pi/2.
QuadratureRule theta_quadrature(int n);

ObjectiveSpec make_objective_spec(const GridSpec& grid, int quad_nodes);

// Average reflectivity: (2/pi) * sum_k w_k |R(theta_k)| over the rule.
double average_reflectivity(const ProfileClass& profile, const ObjectiveSpec& spec);

struct SweepRow {
  double theta_frac = 0.0;  // theta / (pi/2)
  double abs_R = 0.0;
};

// Uniform sampling of |R| in theta_frac over [min_frac, max_frac], endpoints
// included; rows ascend in theta_frac.
std::vector<SweepRow> theta_sweep(const ProfileClass& profile, const GridSpec& grid,
                                  int n_points, double min_frac, double max_frac);

struct AxisSpec {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 2;
};

// Row-major map of average reflectivity over the two rminus coefficients:
// a2 varies along rows (outer), ap along columns (inner). When the marker
// point lies inside an axis range it is spliced into that axis so the grid
// contains it exactly.
struct Scan2dResult {
  std::vector<double> a2_values;
  std::vector<double> ap_values;
  std::vector<double> avg_R;  // a2_values.size() * ap_values.size(), row-major

  double at(size_t ia2, size_t iap) const { return avg_R[ia2 * ap_values.size() + iap]; }
};

Scan2dResult scan2d(int p, const AxisSpec& a2_axis, const AxisSpec& ap_axis,
                    const ObjectiveSpec& spec, double marker_a2 = 23.3,
                    double marker_ap = 121.3);

}  // namespace pmlopt
