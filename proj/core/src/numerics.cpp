#include "pmlopt/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "pmlopt/errors.hpp"

namespace pmlopt {

std::vector<Complex> solve_dense(const DenseComplexSystem& sys) {
  const int n = sys.n;
  if (n < 1) throw DomainError("solve_dense: dimension must be >= 1");
  if (sys.a.size() != static_cast<size_t>(n) * n || sys.b.size() != static_cast<size_t>(n))
    throw LengthMismatch("solve_dense: matrix/rhs sizes do not match dimension");

  std::vector<Complex> a = sys.a;
  std::vector<Complex> x = sys.b;

  double amax = 0.0;
  for (const Complex& v : a) amax = std::max(amax, std::abs(v));
  const double tiny = 1e-14 * amax;

  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a[static_cast<size_t>(k) * n + k]);
    for (int i = k + 1; i < n; ++i) {
      double mag = std::abs(a[static_cast<size_t>(i) * n + k]);
      if (mag > best) {
        best = mag;
        piv = i;
      }
    }
    if (!(best > tiny) || amax == 0.0)
      throw SingularMatrix("solve_dense: pivot below singularity threshold");
    if (piv != k) {
      for (int j = k; j < n; ++j)
        std::swap(a[static_cast<size_t>(piv) * n + j], a[static_cast<size_t>(k) * n + j]);
      std::swap(x[piv], x[k]);
    }
    const Complex pivot = a[static_cast<size_t>(k) * n + k];
    for (int i = k + 1; i < n; ++i) {
      const Complex f = a[static_cast<size_t>(i) * n + k] / pivot;
      if (f == Complex{}) continue;
      for (int j = k + 1; j < n; ++j)
        a[static_cast<size_t>(i) * n + j] -= f * a[static_cast<size_t>(k) * n + j];
      x[i] -= f * x[k];
    }
  }

  for (int i = n - 1; i >= 0; --i) {
    Complex s = x[i];
    for (int j = i + 1; j < n; ++j) s -= a[static_cast<size_t>(i) * n + j] * x[j];
    x[i] = s / a[static_cast<size_t>(i) * n + i];
  }
  return x;
}

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw InvalidInterval("gauss_legendre: node count must be >= 1");
  if (!(a < b)) throw InvalidInterval("gauss_legendre: interval requires a < b");

  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  // Newton iteration on P_n from the classical Chebyshev-based guess; each
  // root found on one side and mirrored so the rule is symmetric by
  // construction.
  const int pairs = (n + 1) / 2;
  for (int k = 0; k < pairs; ++k) {
    double z = std::cos(M_PI * (k + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (z * p1 - p0) / (z * z - 1.0);
      double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.nodes[k] = mid - half * z;
    rule.nodes[n - 1 - k] = mid + half * z;
    rule.weights[k] = half * w;
    rule.weights[n - 1 - k] = half * w;
  }
  return rule;
}

}  // namespace pmlopt
