#pragma once

#include <numbers>

#include "pmlopt/numerics.hpp"
#include "pmlopt/profiles.hpp"

namespace pmlopt {

// How the stretching factor between grid nodes samples sigma.
enum class Sampling {
  MidpointValue,   // sigma at the interval midpoint
  CellAverage2pt,  // mean of sigma at the interval's two Gauss points
};

// Uniform grid of m+1 nodes across the absorbing layer: node 0 sits on the
// terminating wall (zero Dirichlet), node m on the interface to the uniform
// half-space. Layer thickness is m*h.
struct GridSpec {
  double lambda0 = 1.0;  // vacuum wavelength, um
  double n0 = 1.0;       // refractive index of the uniform region
  double h = 0.05;       // grid spacing, um
  int m = 5;             // layer thickness in cells
  Sampling sampling = Sampling::MidpointValue;

  double k0() const { return 2.0 * std::numbers::pi / lambda0; }
};

// One incidence configuration. theta is measured from the interface plane,
// so theta -> 0 is grazing incidence; alpha = k0 n0 sin(theta) is the
// transverse wavenumber and alpha_hat its discrete counterpart.
struct Incidence {
  double theta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double alpha_hat = 0.0;
};

struct ReflectionResult {
  Complex R;
  double abs_R = 0.0;
  double theta = 0.0;
};

// Wavenumber for which the discrete plane wave exactly satisfies the uniform
// second-order stencil: (2 - 2cos(alpha_hat h))/h^2 = alpha^2. Throws
// UnresolvableWave when alpha h / 2 > 1.
double discrete_wavenumber(double alpha, double h);

// theta must lie in (0, pi/2].
Incidence make_incidence(const GridSpec& grid, double theta);

// Bordered (m+1)-dimensional system over the unknowns (u_1..u_m, R): the m
// interior stencil rows plus the interface matching row. The plane-wave
// ansatz is referenced at the interface shifted by ref_offset_cells grid
// cells; the offset rotates the phase of R but leaves |R| unchanged.
DenseComplexSystem assemble_system(const ProfileClass& profile, const GridSpec& grid,
                                   const Incidence& inc, double ref_offset_cells = 0.0);

// Exact discrete reflection coefficient via the bordered solve.
ReflectionResult reflection(const ProfileClass& profile, const GridSpec& grid, double theta);

// Independent check: shoot the recurrence from the wall and project the last
// two values onto the plane-wave basis. Throws DegenerateBasis when the
// basis is numerically singular (alpha_hat h near 0 or pi).
ReflectionResult reflection_oracle(const ProfileClass& profile, const GridSpec& grid,
                                   double theta);

}  // namespace pmlopt
