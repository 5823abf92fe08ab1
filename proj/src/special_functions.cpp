#include "bnzero/special_functions.hpp"

#include <array>
#include <cmath>

namespace bnzero {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

const std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,      -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,    12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6,  1.5056327351493116e-7};

// B_{2k} / (2k)! for k = 1..12
const std::array<double, 13>& bernoulli_over_factorial() {
  static const std::array<double, 13> table = [] {
    const double b2k[13] = {0.0,
                            1.0 / 6.0,
                            -1.0 / 30.0,
                            1.0 / 42.0,
                            -1.0 / 30.0,
                            5.0 / 66.0,
                            -691.0 / 2730.0,
                            7.0 / 6.0,
                            -3617.0 / 510.0,
                            43867.0 / 798.0,
                            -174611.0 / 330.0,
                            854513.0 / 138.0,
                            -236364091.0 / 2730.0};
    std::array<double, 13> t{};
    for (int k = 1; k <= 12; ++k) {
      double fact = 1.0;
      for (int j = 2; j <= 2 * k; ++j) fact *= j;
      t[k] = b2k[k] / fact;
    }
    return t;
  }();
  return table;
}

Complex cpow(double base, Complex e) { return std::exp(e * std::log(base)); }

// (e^z - 1), accurate for small |z|
Complex cexpm1(Complex z) {
  if (std::abs(z) < 1e-4) {
    return z * (1.0 + z / 2.0 * (1.0 + z / 3.0 * (1.0 + z / 4.0)));
  }
  return std::exp(z) - 1.0;
}

// Euler-Maclaurin core: direct part sum_{n=0}^{N-1} (n+a)^{-s} plus the
// regular boundary corrections at base = N + a. The pole term
// base^{1-s}/(s-1) is NOT included; callers add it (or a stabilized
// combination of several of them).
Complex hurwitz_regular(Complex s, double a, int N, int K) {
  Complex sum(0.0, 0.0);
  for (int n = 0; n < N; ++n) sum += cpow(n + a, -s);
  const double base = N + a;
  const double lb = std::log(base);
  sum += 0.5 * std::exp(-s * lb);
  const auto& bf = bernoulli_over_factorial();
  Complex poch = s;  // (s)_{2k-1}
  for (int k = 1; k <= K; ++k) {
    sum += bf[k] * poch * std::exp(-(s + (2.0 * k - 1.0)) * lb);
    poch *= (s + (2.0 * k - 1.0)) * (s + (2.0 * k));
  }
  return sum;
}

int choose_length(Complex s, const EvalSettings& settings) {
  const double t = std::abs(s.imag());
  int N = static_cast<int>(std::ceil(std::max(20.0, t)));
  return std::min(N, settings.series_cutoff);
}

}  // namespace

Complex gamma_complex(Complex s) {
  require_finite(s, "gamma_complex");
  if (s.real() < 0.5) {
    // poles at non-positive integers
    const double rounded = std::round(s.real());
    if (rounded <= 0.0 && std::abs(s.real() - rounded) < 1e-13 && std::abs(s.imag()) < 1e-13) {
      throw std::domain_error("gamma_complex: pole at non-positive integer");
    }
    return kPi / (std::sin(kPi * s) * gamma_complex(1.0 - s));
  }
  const Complex z = s - 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

Complex riemann_zeta(Complex s, const EvalSettings& settings) {
  require_finite(s, "riemann_zeta");
  settings.check();
  if (std::abs(s - 1.0) < 1e-13) throw std::domain_error("riemann_zeta: pole at s = 1");
  const int N = choose_length(s, settings);
  const int K = std::min(settings.euler_maclaurin_terms, 12);
  Complex v = hurwitz_regular(s, 1.0, N, K);
  const double base = N + 1.0;
  v += cpow(base, 1.0 - s) / (s - 1.0);
  return v;
}

Complex hurwitz_zeta(Complex s, double a, const EvalSettings& settings) {
  require_finite(s, "hurwitz_zeta");
  settings.check();
  if (!(a > 0.0) || !(a <= 1.0)) throw std::domain_error("hurwitz_zeta: a must be in (0, 1]");
  if (std::abs(s - 1.0) < 1e-13) throw std::domain_error("hurwitz_zeta: pole at s = 1");
  const int N = choose_length(s, settings);
  const int K = std::min(settings.euler_maclaurin_terms, 12);
  Complex v = hurwitz_regular(s, a, N, K);
  const double base = N + a;
  v += cpow(base, 1.0 - s) / (s - 1.0);
  return v;
}

Complex dirichlet_l(const DirichletCharacter& chi, Complex s, const EvalSettings& settings) {
  require_finite(s, "dirichlet_l");
  settings.check();
  const std::int64_t q = chi.modulus();
  if (chi.is_trivial() && std::abs(s - 1.0) < 1e-13) {
    throw std::domain_error("dirichlet_l: pole at s = 1 for the trivial character");
  }
  if (q == 1) return riemann_zeta(s, settings);

  const int N = choose_length(s, settings);
  const int K = std::min(settings.euler_maclaurin_terms, 12);
  Complex acc(0.0, 0.0);
  if (chi.is_trivial()) {
    for (std::int64_t a = 1; a <= q; ++a) {
      const Complex c = chi.value(a);
      if (c == Complex(0.0, 0.0)) continue;
      const double x = static_cast<double>(a) / q;
      acc += c * (hurwitz_regular(s, x, N, K) + cpow(N + x, 1.0 - s) / (s - 1.0));
    }
  } else {
    // sum_a chi(a) base_a^{1-s}/(s-1) = sum_a chi(a) expm1((1-s) log base_a)/(s-1)
    // because sum_a chi(a) = 0; the ratio stays finite through s = 1.
    Complex pole_acc(0.0, 0.0);
    const Complex h = s - 1.0;
    for (std::int64_t a = 1; a <= q; ++a) {
      const Complex c = chi.value(a);
      if (c == Complex(0.0, 0.0)) continue;
      const double x = static_cast<double>(a) / q;
      acc += c * hurwitz_regular(s, x, N, K);
      const double lb = std::log(N + x);
      Complex ratio;
      if (std::abs(h) * lb < 1e-4) {
        const Complex z = -h * lb;
        ratio = -lb * (1.0 + z / 2.0 * (1.0 + z / 3.0 * (1.0 + z / 4.0)));
      } else {
        ratio = cexpm1(-h * lb) / h;
      }
      pole_acc += c * ratio;
    }
    acc += pole_acc;
  }
  return cpow(static_cast<double>(q), -s) * acc;
}

double beta_fn(double x, double y) {
  require_finite(x, "beta_fn");
  require_finite(y, "beta_fn");
  if (!(x > 0.0) || !(y > 0.0)) throw std::domain_error("beta_fn: arguments must be > 0");
  return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

bool zeta_window_contains(Complex s) {
  return s.real() > 0.0 && s.real() <= 3.0 && std::abs(s.imag()) <= 200.0;
}

double hurwitz_zeta_diff_asymptotic(double s, double x, double y, const EvalSettings& settings) {
  settings.check();
  if (!(s > 0.0)) throw std::domain_error("hurwitz_zeta_diff_asymptotic: s must be > 0");
  if (!(x >= 16.0) || !(y >= 16.0)) {
    throw std::domain_error("hurwitz_zeta_diff_asymptotic: arguments must be >= 16");
  }
  // pole parts: (x^{1-s} - y^{1-s})/(s-1) -> log(y/x) as s -> 1
  const double h = 1.0 - s;
  const double L = std::log(y / x);
  double pole;
  if (std::abs(h * L) < 1e-5) {
    const double z = h * L;
    pole = L * (1.0 + z / 2.0 * (1.0 + z / 3.0 * (1.0 + z / 4.0)));
  } else {
    pole = std::expm1(h * L) / h;
  }
  pole *= std::pow(x, h);  // x^{1-s} (e^{(1-s)L} - 1) / (s - 1), rearranged

  double diff = pole + 0.5 * (std::pow(x, -s) - std::pow(y, -s));
  const auto& bf = bernoulli_over_factorial();
  const int K = std::min(settings.euler_maclaurin_terms, 12);
  double poch = s;
  for (int k = 1; k <= K; ++k) {
    const double e = s + 2.0 * k - 1.0;
    diff += bf[k] * poch * (std::pow(x, -e) - std::pow(y, -e));
    poch *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
  }
  return diff;
}

}  // namespace bnzero
