#pragma once

#include <complex>
#include <vector>

namespace pmlopt {

using Complex = std::complex<double>;

// Row-major dense complex system A x = b.
struct DenseComplexSystem {
  int n = 0;
  std::vector<Complex> a;  // n*n entries, row-major
  std::vector<Complex> b;  // n entries
};

// Gaussian elimination with partial pivoting. The input is left unmodified.
// Throws SingularMatrix when a pivot falls below 1e-14 times the largest
// initial matrix entry magnitude.
std::vector<Complex> solve_dense(const DenseComplexSystem& sys);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule on (a, b). Nodes are strictly interior and
// ascending; weights are positive and sum to b-a. Throws InvalidInterval
// when a >= b or n < 1.
QuadratureRule gauss_legendre(int n, double a, double b);

}  // namespace pmlopt
