#include "pmlopt/reflectivity.hpp"

#include <cmath>

#include "pmlopt/errors.hpp"

namespace pmlopt {

namespace {

constexpr double kPi = std::numbers::pi;

// sigma at grid coordinate j (in cells, possibly half-integer), clamped to 0
// on and beyond the interface where the medium is uniform.
double sigma_at(const ProfileClass& profile, const GridSpec& grid, double j) {
  const double tau = 1.0 - j / grid.m;
  if (tau <= 0.0) return 0.0;
  return sigma(profile, tau);
}

// Stretching factor between nodes: s = 1 + i sigma, with sigma sampled per
// the grid's sampling mode over the cell centered at half-integer j.
Complex s_half(const ProfileClass& profile, const GridSpec& grid, double j) {
  double sig;
  if (grid.sampling == Sampling::MidpointValue) {
    sig = sigma_at(profile, grid, j);
  } else {
    const double g = 0.5 / std::sqrt(3.0);  // 2-point Gauss offset in cell units
    sig = 0.5 * (sigma_at(profile, grid, j - g) + sigma_at(profile, grid, j + g));
  }
  return {1.0, sig};
}

Complex s_node(const ProfileClass& profile, const GridSpec& grid, int j) {
  return {1.0, sigma_at(profile, grid, j)};
}

}  // namespace

double discrete_wavenumber(double alpha, double h) {
  if (!(h > 0.0)) throw DomainError("discrete_wavenumber: h must be positive");
  if (!(alpha >= 0.0)) throw DomainError("discrete_wavenumber: alpha must be nonnegative");
  const double half = 0.5 * alpha * h;
  if (half > 1.0)
    throw UnresolvableWave("discrete_wavenumber: alpha h / 2 > 1, wave not resolvable");
  return (2.0 / h) * std::asin(half);
}

Incidence make_incidence(const GridSpec& grid, double theta) {
  if (!(theta > 0.0 && theta <= 0.5 * kPi))
    throw DomainError("make_incidence: theta must lie in (0, pi/2]");
  Incidence inc;
  inc.theta = theta;
  const double kn = grid.k0() * grid.n0;
  inc.alpha = kn * std::sin(theta);
  inc.beta = kn * std::cos(theta);
  inc.alpha_hat = discrete_wavenumber(inc.alpha, grid.h);
  return inc;
}

DenseComplexSystem assemble_system(const ProfileClass& profile, const GridSpec& grid,
                                   const Incidence& inc, double ref_offset_cells) {
  const int m = grid.m;
  if (m < 1) throw DomainError("assemble_system: m must be >= 1");
  const int n = m + 1;
  const double h2 = grid.h * grid.h;
  const double alpha2 = inc.alpha * inc.alpha;
  const double phase = inc.alpha_hat * grid.h;
  const double c = ref_offset_cells;

  DenseComplexSystem sys;
  sys.n = n;
  sys.a.assign(static_cast<size_t>(n) * n, Complex{});
  sys.b.assign(n, Complex{});

  auto at = [&](int row, int col) -> Complex& {
    return sys.a[static_cast<size_t>(row) * n + col];
  };

  // Half-node stretching factors: shalf[k] sits between nodes k and k+1.
  std::vector<Complex> shalf(m + 1);
  for (int k = 0; k <= m; ++k) shalf[k] = s_half(profile, grid, k + 0.5);

  // Interior rows j = 1..m over unknowns u_1..u_m (columns 0..m-1), with the
  // reflection coefficient R in column m. Dirichlet u_0 = 0 drops the first
  // sub-diagonal term; the ghost value u_{m+1} is eliminated by the
  // plane-wave ansatz, feeding the R column and the right-hand side.
  for (int j = 1; j <= m; ++j) {
    const int row = j - 1;
    const Complex inv_sj = 1.0 / s_node(profile, grid, j);
    const Complex inv_lo = 1.0 / shalf[j - 1];
    const Complex inv_hi = 1.0 / shalf[j];
    if (j >= 2) at(row, j - 2) = inv_sj * inv_lo / h2;
    at(row, j - 1) = -inv_sj * (inv_lo + inv_hi) / h2 + alpha2;
    if (j <= m - 1) {
      at(row, j) = inv_sj * inv_hi / h2;
    } else {
      const Complex ghost = inv_sj * inv_hi / h2;
      const Complex e_plus = std::polar(1.0, (1.0 - c) * phase);
      const Complex e_minus = std::polar(1.0, -(1.0 - c) * phase);
      at(row, m) = ghost * e_plus;
      sys.b[row] = -ghost * e_minus;
    }
  }

  // Interface matching: the ansatz evaluated at node m gives
  // u_m = e^{+i c phase} + R e^{-i c phase}.
  at(m, m - 1) = 1.0;
  at(m, m) = -std::polar(1.0, -c * phase);
  sys.b[m] = std::polar(1.0, c * phase);
  return sys;
}

ReflectionResult reflection(const ProfileClass& profile, const GridSpec& grid, double theta) {
  const Incidence inc = make_incidence(grid, theta);
  const DenseComplexSystem sys = assemble_system(profile, grid, inc);
  const std::vector<Complex> x = solve_dense(sys);
  const Complex R = x[grid.m];
  return {R, std::abs(R), theta};
}

ReflectionResult reflection_oracle(const ProfileClass& profile, const GridSpec& grid,
                                   double theta) {
  const Incidence inc = make_incidence(grid, theta);
  const int m = grid.m;
  const double h2 = grid.h * grid.h;
  const double alpha2 = inc.alpha * inc.alpha;

  // Shoot from the wall at arbitrary scale: u_0 = 0, u_1 = 1, then advance
  // the stencil recurrence to u_{m+1}.
  Complex u_prev = 0.0;
  Complex u_cur = 1.0;
  for (int j = 1; j <= m; ++j) {
    const Complex sj = s_node(profile, grid, j);
    const Complex s_lo = s_half(profile, grid, j - 0.5);
    const Complex s_hi = s_half(profile, grid, j + 0.5);
    const Complex u_next = u_cur + s_hi * ((u_cur - u_prev) / s_lo - alpha2 * h2 * sj * u_cur);
    u_prev = u_cur;
    u_cur = u_next;
  }
  // u_prev = u_m, u_cur = u_{m+1}.

  const double phase = inc.alpha_hat * grid.h;
  const Complex e_plus = std::polar(1.0, phase);
  const Complex e_minus = std::polar(1.0, -phase);
  const Complex det = e_plus - e_minus;  // 2i sin(phase)
  if (std::abs(det) < 1e-12)
    throw DegenerateBasis("reflection_oracle: plane-wave basis is singular");
  const Complex A = (u_prev * e_plus - u_cur) / det;
  const Complex B = (u_cur - u_prev * e_minus) / det;
  const Complex R = B / A;
  return {R, std::abs(R), theta};
}

}  // namespace pmlopt
