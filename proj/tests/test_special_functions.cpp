#include <doctest.h>

#include <cmath>

#include "bnzero/special_functions.hpp"
#include "oracles.hpp"

using namespace bnzero;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("gamma: integer and half-integer values") {
  CHECK(std::abs(gamma_complex({1.0, 0.0}) - Complex(1.0, 0.0)) < 1e-13);
  CHECK(std::abs(gamma_complex({5.0, 0.0}) - Complex(24.0, 0.0)) < 1e-11);
  CHECK(std::abs(gamma_complex({0.5, 0.0}) - Complex(std::sqrt(kPi), 0.0)) < 1e-12);
}

TEST_CASE("gamma: reflection identity on a grid avoiding integers") {
  for (double re = -3.3; re < 3.5; re += 0.7) {
    for (double im = -8.0; im <= 8.0; im += 3.1) {
      const Complex s(re, im);
      const Complex lhs =
          gamma_complex(s) * gamma_complex(1.0 - s) * std::sin(kPi * s) / kPi;
      CHECK(std::abs(lhs - Complex(1.0, 0.0)) < 1e-10);
    }
  }
}

TEST_CASE("gamma: poles rejected") {
  CHECK_THROWS_AS(gamma_complex({0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(gamma_complex({-3.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(gamma_complex({std::nan(""), 0.0}), std::invalid_argument);
}

TEST_CASE("riemann zeta: special values") {
  CHECK(std::abs(riemann_zeta({2.0, 0.0}) - Complex(kPi * kPi / 6.0, 0.0)) < 1e-12);
  CHECK(std::abs(riemann_zeta({0.0, 0.0}) - Complex(-0.5, 0.0)) < 1e-12);
  CHECK_THROWS_AS(riemann_zeta({1.0, 0.0}), std::domain_error);
}

TEST_CASE("riemann zeta: critical line value against the long-double oracle") {
  const Complex got = riemann_zeta({0.5, 50.0});
  const Complex want = oracles::to_double(oracles::zeta_ld({0.5L, 50.0L}));
  CHECK(std::abs(got - want) < 1e-10);
  // a few more points across the declared window
  for (double t : {1.5, 14.0, 77.5, 199.0}) {
    for (double re : {0.25, 1.25, 2.75}) {
      const Complex s(re, t);
      CHECK(std::abs(riemann_zeta(s) -
                     oracles::to_double(oracles::zeta_ld({(long double)re, (long double)t}))) <
            1e-10);
    }
  }
  CHECK(zeta_window_contains({0.5, 50.0}));
  CHECK(!zeta_window_contains({0.5, 500.0}));
}

TEST_CASE("hurwitz zeta: reductions and oracle point") {
  CHECK(std::abs(hurwitz_zeta({2.0, 0.0}, 1.0) - riemann_zeta({2.0, 0.0})) < 1e-12);
  CHECK(std::abs(hurwitz_zeta({2.0, 0.0}, 0.5) - Complex(4.9348022005446793, 0.0)) < 1e-10);
  const Complex got = hurwitz_zeta({0.5, 10.0}, 1.0 / 3.0);
  const Complex want =
      oracles::to_double(oracles::hurwitz_zeta_ld({0.5L, 10.0L}, 1.0L / 3.0L));
  CHECK(std::abs(got - want) < 1e-10);
  CHECK_THROWS_AS(hurwitz_zeta({2.0, 0.0}, 0.0), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta({2.0, 0.0}, 1.5), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta({1.0, 0.0}, 0.5), std::domain_error);
}

TEST_CASE("hurwitz identity zeta(s,1/2) = (2^s - 1) zeta(s) on a grid") {
  for (double re : {0.5, 1.5, 2.5}) {
    for (double im : {0.0, 3.0, 20.0}) {
      const Complex s(re, im);
      const Complex lhs = hurwitz_zeta(s, 0.5);
      const Complex rhs = (std::pow(Complex(2.0, 0.0), s) - 1.0) * riemann_zeta(s);
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
}

TEST_CASE("dirichlet L: trivial character reduces to zeta") {
  const DirichletCharacter triv = DirichletCharacter::validate(1, {Complex(1.0, 0.0)});
  CHECK(std::abs(dirichlet_l(triv, {2.0, 0.0}) - riemann_zeta({2.0, 0.0})) < 1e-12);
  CHECK_THROWS_AS(dirichlet_l(triv, {1.0, 0.0}), std::domain_error);
}

TEST_CASE("dirichlet L: L(1) for the quadratic characters mod 4 and mod 3") {
  const DirichletCharacter chi4 = kronecker_character(-4);
  const DirichletCharacter chi3 = kronecker_character(-3);
  // Leibniz 1 - 1/3 + 1/5 - ... = pi/4: paired terms 2/((4k+1)(4k+3)) with
  // the integral tail sum_{k>=N} ~ 1/(8N)
  double leibniz = 0.0;
  const int N4 = 20000;
  for (int k = 0; k < N4; ++k) {
    leibniz += 1.0 / (4.0 * k + 1.0) - 1.0 / (4.0 * k + 3.0);
  }
  leibniz += 1.0 / (8.0 * N4);
  CHECK(std::abs(dirichlet_l(chi4, {1.0, 0.0}).real() - kPi / 4.0) < 1e-9);
  CHECK(std::abs(dirichlet_l(chi4, {1.0, 0.0}).real() - leibniz) < 1e-7);

  // sum 1/(3k+1) - 1/(3k+2) = sum 1/((3k+1)(3k+2)), integral tail ~ 1/(9K)
  double s3 = 0.0;
  const int K = 4000;
  for (int k = 0; k < K; ++k) s3 += 1.0 / (3.0 * k + 1.0) - 1.0 / (3.0 * k + 2.0);
  s3 += 1.0 / (9.0 * K);
  CHECK(std::abs(dirichlet_l(chi3, {1.0, 0.0}).real() - 0.6045997880780726) < 1e-9);
  CHECK(std::abs(dirichlet_l(chi3, {1.0, 0.0}).real() - s3) < 1e-6);
  CHECK(std::abs(dirichlet_l(chi3, {1.0, 0.0}).imag()) < 1e-12);
}

TEST_CASE("dirichlet L: character orthogonality reproduces residue-class sums") {
  // all characters mod 5: (Z/5)* is cyclic, generated by 2
  const Complex I(0.0, 1.0);
  auto chi_mod5 = [&](int j) {
    std::vector<Complex> v(5, Complex(0.0, 0.0));
    // 2^0=1, 2^1=2, 2^2=4, 2^3=3
    const int log_table[5] = {-1, 0, 1, 3, 2};  // discrete log base 2
    for (int n = 1; n < 5; ++n) {
      v[n] = std::exp(I * (2.0 * kPi * j * log_table[n] / 4.0));
    }
    return DirichletCharacter::validate(5, v);
  };
  std::vector<DirichletCharacter> chars;
  for (int j = 0; j < 4; ++j) chars.push_back(chi_mod5(j));

  auto check_point = [&](int n, Complex s) {
    Complex acc(0.0, 0.0);
    for (const auto& chi : chars) {
      acc += dirichlet_l(chi, s) * std::conj(chi.value(n)) / 4.0;
    }
    const Complex direct = std::pow(Complex(5.0, 0.0), -s) * hurwitz_zeta(s, n / 5.0);
    CHECK(std::abs(acc - direct) < 1e-9);
  };
  check_point(2, {2.0, 0.0});
  check_point(3, {1.5, 0.0});
  check_point(1, {2.5, 1.0});
}

TEST_CASE("beta function") {
  CHECK(beta_fn(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(beta_fn(2.0, 2.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
  // symmetry is exact as computed
  CHECK(beta_fn(3.7, 1.9) == beta_fn(1.9, 3.7));
  // large-argument asymptotic: beta(2 sigma, 1-2 sigma1) ~ Gamma(1-2 sigma1)/(2 sigma)^{1-2 sigma1}
  const double direct = std::exp(std::lgamma(20.0) + std::lgamma(0.2) - std::lgamma(20.2));
  CHECK(beta_fn(20.0, 0.2) == doctest::Approx(direct).epsilon(1e-12));
  const double stirling = std::tgamma(0.2) / std::pow(20.0, 0.2);
  CHECK(std::abs(beta_fn(20.0, 0.2) - stirling) / stirling < 0.10);
  CHECK_THROWS_AS(beta_fn(-1.0, 2.0), std::domain_error);
}
