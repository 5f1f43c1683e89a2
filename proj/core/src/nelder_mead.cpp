#include "pmlopt/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pmlopt {

namespace {

struct Vertex {
  std::vector<double> x;
  double f = 0.0;
};

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double c : v) m = std::max(m, std::abs(c));
  return m;
}

void validate(const SimplexConfig& c, size_t n) {
  if (n < 1) throw std::invalid_argument("nelder_mead: x0 must be nonempty");
  if (!(c.reflection_coeff > 0.0))
    throw std::invalid_argument("nelder_mead: reflection coefficient must be positive");
  if (!(c.expansion_coeff > std::max(1.0, c.reflection_coeff)))
    throw std::invalid_argument("nelder_mead: expansion must exceed max(1, reflection)");
  if (!(c.contraction_coeff > 0.0 && c.contraction_coeff < 1.0))
    throw std::invalid_argument("nelder_mead: contraction must lie in (0,1)");
  if (!(c.shrink_coeff > 0.0 && c.shrink_coeff < 1.0))
    throw std::invalid_argument("nelder_mead: shrink must lie in (0,1)");
  if (c.max_evals < static_cast<int>(n) + 1)
    throw std::invalid_argument("nelder_mead: max_evals must be at least n+1");
  if (!(c.tol_x > 0.0) || !(c.tol_f > 0.0))
    throw std::invalid_argument("nelder_mead: tolerances must be positive");
}

}  // namespace

std::vector<std::vector<double>> initial_simplex(const std::vector<double>& x0) {
  if (x0.empty()) throw std::invalid_argument("initial_simplex: x0 must be nonempty");
  const size_t n = x0.size();
  std::vector<std::vector<double>> vertices(n + 1, x0);
  for (size_t k = 0; k < n; ++k) {
    double& c = vertices[k + 1][k];
    c = (c != 0.0) ? 1.05 * c : 0.00025;
  }
  return vertices;
}

OptResult nelder_mead(const Objective& f, const std::vector<double>& x0,
                      const SimplexConfig& config, const IterationObserver& observer) {
  const size_t n = x0.size();
  validate(config, n);

  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };

  std::vector<Vertex> simplex;
  simplex.reserve(n + 1);
  for (auto& v : initial_simplex(x0)) simplex.push_back({std::move(v), 0.0});
  for (auto& v : simplex) v.f = eval(v.x);

  // Stable sort keeps insertion order on ties, so runs are deterministic.
  auto order = [&] {
    std::stable_sort(simplex.begin(), simplex.end(),
                     [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  };
  order();

  const double rho = config.reflection_coeff;
  const double chi = config.expansion_coeff;
  const double psi = config.contraction_coeff;
  const double sigma = config.shrink_coeff;

  int iterations = 0;
  Termination termination = Termination::MaxEvals;

  while (true) {
    const Vertex& best = simplex.front();
    const Vertex& worst = simplex.back();

    double x_spread = 0.0;
    for (size_t i = 1; i <= n; ++i)
      for (size_t k = 0; k < n; ++k)
        x_spread = std::max(x_spread, std::abs(simplex[i].x[k] - best.x[k]));
    const bool f_ok = worst.f - best.f < config.tol_f * (1.0 + std::abs(best.f));
    const bool x_ok = x_spread < config.tol_x * (1.0 + inf_norm(best.x));
    if (f_ok && x_ok) {
      termination = Termination::Converged;
      break;
    }
    if (evals >= config.max_evals) {
      termination = Termination::MaxEvals;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) centroid[k] += simplex[i].x[k] / n;

    auto blend = [&](double t) {
      // Point on the line through the centroid and the worst vertex:
      // (1+t) centroid - t worst.
      std::vector<double> x(n);
      for (size_t k = 0; k < n; ++k) x[k] = (1.0 + t) * centroid[k] - t * worst.x[k];
      return x;
    };

    std::vector<double> xr = blend(rho);
    const double fr = eval(xr);
    bool shrink = false;

    if (fr < simplex[0].f) {
      std::vector<double> xe = blend(rho * chi);
      const double fe = eval(xe);
      if (fe < fr) {
        simplex.back() = {std::move(xe), fe};
      } else {
        simplex.back() = {std::move(xr), fr};
      }
    } else if (fr < simplex[n - 1].f) {
      simplex.back() = {std::move(xr), fr};
    } else if (fr < worst.f) {
      std::vector<double> xc = blend(rho * psi);
      const double fc = eval(xc);
      if (fc <= fr) {
        simplex.back() = {std::move(xc), fc};
      } else {
        shrink = true;
      }
    } else {
      std::vector<double> xc = blend(-psi);
      const double fc = eval(xc);
      if (fc < worst.f) {
        simplex.back() = {std::move(xc), fc};
      } else {
        shrink = true;
      }
    }

    if (shrink) {
      for (size_t i = 1; i <= n; ++i) {
        for (size_t k = 0; k < n; ++k)
          simplex[i].x[k] = simplex[0].x[k] + sigma * (simplex[i].x[k] - simplex[0].x[k]);
        simplex[i].f = eval(simplex[i].x);
      }
    }

    order();
    ++iterations;
    if (observer) observer(iterations, simplex.front().f);
  }

  OptResult result;
  result.best_point = simplex.front().x;
  result.best_value = simplex.front().f;
  result.iterations = iterations;
  result.evals = evals;
  result.termination = termination;
  return result;
}

}  // namespace pmlopt
