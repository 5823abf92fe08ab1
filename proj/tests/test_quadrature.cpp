#include <doctest.h>

#include <cmath>

#include "bnzero/quadrature.hpp"

using namespace bnzero;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  const QuadratureRule& gl = gauss_legendre(8);
  double s = 0.0;
  for (int i = 0; i < gl.size(); ++i) {
    const double x = gl.nodes[i];
    s += gl.weights[i] * (5.0 * std::pow(x, 14) + x * x * x - 2.0 * x * x + 7.0);
  }
  // integral over [-1,1]: 5*2/15 + 0 - 4/3 + 14
  CHECK(s == doctest::Approx(2.0 / 3.0 - 4.0 / 3.0 + 14.0).epsilon(1e-13));
  CHECK(gauss_legendre(2).nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)));
}

TEST_CASE("gauss-jacobi handles the left-end algebraic weight") {
  // integral_0^1 v^{-s} v^k dv = 1/(k+1-s)
  for (double s1 : {0.2, 0.45, 0.8}) {
    const PanelRule p = left_singular_panel(0.0, 1.0, s1, 12);
    for (int k = 0; k <= 3; ++k) {
      double acc = 0.0;
      for (size_t i = 0; i < p.nodes.size(); ++i) acc += p.weights[i] * std::pow(p.nodes[i], k);
      CHECK(acc == doctest::Approx(1.0 / (k + 1.0 - s1)).epsilon(1e-12));
    }
  }
  // shifted panel [3, 4.5]
  const PanelRule p = left_singular_panel(3.0, 4.5, 0.3, 16);
  double acc = 0.0;
  for (size_t i = 0; i < p.nodes.size(); ++i) acc += p.weights[i] * p.nodes[i];
  // integral_3^4.5 (u-3)^{-0.3} u du, by substitution v = u-3:
  // = 1.5^{0.7}/0.7 * 3 ... compute directly: int_0^1.5 v^{-0.3}(v+3) dv
  const double want = std::pow(1.5, 1.7) / 1.7 + 3.0 * std::pow(1.5, 0.7) / 0.7;
  CHECK(acc == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("tanh-sinh absorbs endpoint singularities") {
  const PanelRule p = tanh_sinh_panel(0.0, 1.0);
  double a = 0.0, b = 0.0, c = 0.0;
  for (size_t i = 0; i < p.nodes.size(); ++i) {
    a += p.weights[i] * std::pow(p.nodes[i], -0.5);                   // -> 2
    b += p.weights[i] * std::pow(1.0 - p.nodes[i], -0.3);            // -> 1/0.7
    c += p.weights[i] * std::log(p.nodes[i]);                        // -> -1
  }
  CHECK(a == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(b == doctest::Approx(1.0 / 0.7).epsilon(1e-10));
  CHECK(c == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("power_integral is stable through the logarithmic case") {
  CHECK(power_integral(2.0, 1.0, 3.0) == doctest::Approx(26.0 / 3.0).epsilon(1e-14));
  CHECK(power_integral(-1.0, 2.0, 6.0) == doctest::Approx(std::log(3.0)).epsilon(1e-14));
  CHECK(power_integral(-1.0 + 1e-13, 2.0, 6.0) == doctest::Approx(std::log(3.0)).epsilon(1e-9));
}

TEST_CASE("pairwise_sum is order-deterministic and accurate") {
  std::vector<double> v(10001);
  for (size_t i = 0; i < v.size(); ++i) v[i] = 1.0 / (1.0 + static_cast<double>(i));
  const double s1 = pairwise_sum(v);
  const double s2 = pairwise_sum(v);
  CHECK(s1 == s2);
  long double ref = 0.0L;
  for (double x : v) ref += (long double)x;
  CHECK(std::abs(s1 - (double)ref) < 1e-12);
}
