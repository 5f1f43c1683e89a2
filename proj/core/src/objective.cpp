#include "pmlopt/objective.hpp"

#include <algorithm>
#include <cmath>

#include "pmlopt/errors.hpp"

namespace pmlopt {

namespace {

constexpr double kPi = std::numbers::pi;

// Grading strength of the sinh map. Strong enough that the grazing boundary
// layer and the interference nulls of |R(theta)| are resolved stably at 100
// nodes (doubling the node count moves the average by well under 0.1%), while
// nodes remain spread across the whole quarter circle.
constexpr double kThetaGrading = 5.5;

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> v(steps);
  for (int i = 0; i < steps; ++i) v[i] = lo + (hi - lo) * i / (steps - 1);
  return v;
}

// Insert x into a sorted axis when it falls inside the range and is not
// already present.
void splice_into(std::vector<double>& axis, double x) {
  if (axis.empty() || x < axis.front() || x > axis.back()) return;
  auto it = std::lower_bound(axis.begin(), axis.end(), x);
  if (it != axis.end() && *it == x) return;
  axis.insert(it, x);
}

}  // namespace

QuadratureRule theta_quadrature(int n) {
  const QuadratureRule base = gauss_legendre(n, 0.0, 1.0);
  const double a = kThetaGrading;
  const double scale = 0.5 * kPi / std::sinh(a);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double t = base.nodes[i];
    rule.nodes[i] = scale * std::sinh(a * t);
    rule.weights[i] = base.weights[i] * scale * a * std::cosh(a * t);
  }
  return rule;
}

ObjectiveSpec make_objective_spec(const GridSpec& grid, int quad_nodes) {
  return {grid, theta_quadrature(quad_nodes)};
}

double average_reflectivity(const ProfileClass& profile, const ObjectiveSpec& spec) {
  double sum = 0.0;
  const size_t n = spec.quad.nodes.size();
  for (size_t k = 0; k < n; ++k)
    sum += spec.quad.weights[k] * reflection(profile, spec.grid, spec.quad.nodes[k]).abs_R;
  return sum * 2.0 / kPi;
}

std::vector<SweepRow> theta_sweep(const ProfileClass& profile, const GridSpec& grid,
                                  int n_points, double min_frac, double max_frac) {
  if (n_points < 2) throw DomainError("theta_sweep: need at least two points");
  if (!(min_frac > 0.0 && min_frac < max_frac && max_frac <= 1.0))
    throw DomainError("theta_sweep: require 0 < min_frac < max_frac <= 1");
  std::vector<SweepRow> rows(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double frac = min_frac + (max_frac - min_frac) * i / (n_points - 1);
    rows[i] = {frac, reflection(profile, grid, frac * 0.5 * kPi).abs_R};
  }
  return rows;
}

Scan2dResult scan2d(int p, const AxisSpec& a2_axis, const AxisSpec& ap_axis,
                    const ObjectiveSpec& spec, double marker_a2, double marker_ap) {
  if (p < 2) throw DomainError("scan2d: p must be >= 2");
  if (a2_axis.steps < 2 || ap_axis.steps < 2) throw DomainError("scan2d: steps must be >= 2");
  if (!(a2_axis.lo < a2_axis.hi) || !(ap_axis.lo < ap_axis.hi))
    throw InvalidInterval("scan2d: axis ranges require lo < hi");

  Scan2dResult out;
  out.a2_values = linspace(a2_axis.lo, a2_axis.hi, a2_axis.steps);
  out.ap_values = linspace(ap_axis.lo, ap_axis.hi, ap_axis.steps);
  splice_into(out.a2_values, marker_a2);
  splice_into(out.ap_values, marker_ap);

  out.avg_R.reserve(out.a2_values.size() * out.ap_values.size());
  for (double a2 : out.a2_values)
    for (double ap : out.ap_values)
      out.avg_R.push_back(average_reflectivity(RationalMinus{a2, ap, p}, spec));
  return out;
}

}  // namespace pmlopt
