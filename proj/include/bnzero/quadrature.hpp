#ifndef BNZERO_QUADRATURE_HPP
#define BNZERO_QUADRATURE_HPP

#include <vector>

#include "bnzero/types.hpp"

namespace bnzero {

// Nodes/weights on the reference interval [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

// Gauss-Legendre rule, exact for polynomials of degree 2n-1.
const QuadratureRule& gauss_legendre(int n);

// Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b on [-1,1], a,b > -1.
// Computed by Golub-Welsch from the three-term recurrence.
QuadratureRule gauss_jacobi(int n, double a, double b);

// Fixed tanh-sinh (double-exponential) rule on (0,1); handles integrable
// endpoint singularities of unknown algebraic exponent.
const QuadratureRule& tanh_sinh_unit();

// sum_i W_i f(u_i) ~ integral_{lo}^{hi} (u-lo)^{-sigma} f(u) du, sigma < 1.
// sigma == 0 degenerates to Gauss-Legendre.
struct PanelRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
PanelRule left_singular_panel(double lo, double hi, double sigma, int n);
PanelRule legendre_panel(double lo, double hi, int n);
PanelRule tanh_sinh_panel(double lo, double hi);

// integral_{lo}^{hi} u^p du, stable through p = -1.
double power_integral(double p, double lo, double hi);

// Deterministic pairwise tree reduction; result is independent of how the
// addends were produced (thread count, chunking).
double pairwise_sum(const std::vector<double>& v);
Complex pairwise_sum(const std::vector<Complex>& v);

}  // namespace bnzero

#endif
