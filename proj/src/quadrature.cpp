#include "bnzero/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace bnzero {

namespace {

// Golub-Welsch: nodes are eigenvalues of the symmetrized Jacobi matrix,
// weights are mass * (first eigenvector component)^2.
QuadratureRule golub_welsch(const std::vector<double>& alpha,
                            const std::vector<double>& beta_sq, double mass) {
  const int n = static_cast<int>(alpha.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    J(i, i) = alpha[i];
    if (i + 1 < n) {
      const double b = std::sqrt(beta_sq[i + 1]);
      J(i, i + 1) = b;
      J(i + 1, i) = b;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mass * v0 * v0;
  }
  return rule;
}

QuadratureRule make_jacobi(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: n must be >= 1");
  if (!(a > -1.0) || !(b > -1.0)) throw std::invalid_argument("gauss_jacobi: exponents must be > -1");
  std::vector<double> alpha(n), beta_sq(n, 0.0);
  const double ab = a + b;
  alpha[0] = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
    alpha[k] = (b * b - a * a) / den;
    beta_sq[k] = 4.0 * k * (k + a) * (k + b) * (k + ab) /
                 ((2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) * (2.0 * k + ab - 1.0));
  }
  // total mass: 2^{a+b+1} B(a+1, b+1)
  const double mass =
      std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
  return golub_welsch(alpha, beta_sq, mass);
}

}  // namespace

const QuadratureRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_jacobi(n, 0.0, 0.0)).first;
  return it->second;
}

QuadratureRule gauss_jacobi(int n, double a, double b) { return make_jacobi(n, a, b); }

const QuadratureRule& tanh_sinh_unit() {
  static QuadratureRule rule = [] {
    QuadratureRule r;
    // x(t) = (1 + tanh((pi/2) sinh t)) / 2 on a truncated uniform t-grid;
    // the sigmoid form keeps the tiny endpoint distances exact where tanh
    // would saturate
    const double h = 4.3 / 88.0;
    const double half_pi = std::asin(1.0);
    for (int k = -88; k <= 88; ++k) {
      const double t = k * h;
      const double s = half_pi * std::sinh(t);
      const double x = s < 0.0 ? std::exp(2.0 * s) / (1.0 + std::exp(2.0 * s))
                               : 1.0 / (1.0 + std::exp(-2.0 * s));
      const double ch = std::cosh(s);
      const double w = 0.5 * h * half_pi * std::cosh(t) / (ch * ch);
      if (w < 1e-300 || x <= 0.0 || x >= 1.0) continue;
      r.nodes.push_back(x);
      r.weights.push_back(w);
    }
    return r;
  }();
  return rule;
}

PanelRule legendre_panel(double lo, double hi, int n) {
  const QuadratureRule& gl = gauss_legendre(n);
  PanelRule p;
  p.nodes.resize(gl.size());
  p.weights.resize(gl.size());
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  for (int i = 0; i < gl.size(); ++i) {
    p.nodes[i] = mid + half * gl.nodes[i];
    p.weights[i] = half * gl.weights[i];
  }
  return p;
}

PanelRule left_singular_panel(double lo, double hi, double sigma, int n) {
  if (sigma == 0.0) return legendre_panel(lo, hi, n);
  if (!(sigma < 1.0)) throw std::invalid_argument("left_singular_panel: sigma must be < 1");
  QuadratureRule gj = gauss_jacobi(n, 0.0, -sigma);
  PanelRule p;
  p.nodes.resize(gj.size());
  p.weights.resize(gj.size());
  const double half = 0.5 * (hi - lo);
  // u = lo + (hi-lo)(1+x)/2, so (u-lo)^{-sigma} = half^{-sigma} (1+x)^{-sigma}
  const double scale = std::pow(half, 1.0 - sigma);
  for (int i = 0; i < gj.size(); ++i) {
    p.nodes[i] = lo + half * (1.0 + gj.nodes[i]);
    p.weights[i] = scale * gj.weights[i];
  }
  return p;
}

PanelRule tanh_sinh_panel(double lo, double hi) {
  const QuadratureRule& ts = tanh_sinh_unit();
  PanelRule p;
  p.nodes.resize(ts.size());
  p.weights.resize(ts.size());
  const double len = hi - lo;
  for (int i = 0; i < ts.size(); ++i) {
    p.nodes[i] = lo + len * ts.nodes[i];
    p.weights[i] = len * ts.weights[i];
  }
  return p;
}

double power_integral(double p, double lo, double hi) {
  if (!(lo > 0.0) || !(hi >= lo)) throw std::invalid_argument("power_integral: need 0 < lo <= hi");
  const double q = p + 1.0;
  const double L = std::log(hi / lo);
  const double z = q * L;
  // lo^q * (e^{qL} - 1)/q, with the q -> 0 limit handled by series
  double phi;  // (e^z - 1)/z
  if (std::abs(z) < 1e-5) {
    phi = 1.0 + z / 2.0 * (1.0 + z / 3.0 * (1.0 + z / 4.0));
  } else {
    phi = std::expm1(z) / z;
  }
  return std::pow(lo, q) * L * phi;
}

namespace {
template <typename T>
T pairwise_block(const std::vector<T>& v, size_t lo, size_t hi) {
  if (hi - lo <= 8) {
    T acc{};
    for (size_t i = lo; i < hi; ++i) acc += v[i];
    return acc;
  }
  const size_t mid = lo + (hi - lo) / 2;
  return pairwise_block(v, lo, mid) + pairwise_block(v, mid, hi);
}
}  // namespace

double pairwise_sum(const std::vector<double>& v) {
  return v.empty() ? 0.0 : pairwise_block(v, 0, v.size());
}

Complex pairwise_sum(const std::vector<Complex>& v) {
  return v.empty() ? Complex(0.0, 0.0) : pairwise_block(v, 0, v.size());
}

}  // namespace bnzero
