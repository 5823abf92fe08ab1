#include "bnzero/admissible.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bnzero {

namespace {

void check_alpha_range(const std::vector<double>& alphas) {
  if (alphas.empty()) throw std::invalid_argument("admissible: empty sequence");
  for (double a : alphas) {
    require_finite(a, "alpha");
    if (!(a > 0.0 && a <= 1.0)) {
      throw std::invalid_argument("admissible: alphas must lie in (0, 1]");
    }
  }
}

// Moment-problem Vandermonde solve: find w with sum_j x_j^k w_j = f_k,
// k = 0..n-1. The inverse of V_{kj} = x_j^k has rows given by the Lagrange
// basis coefficients, so w_j = sum_k lagrange_coeff(j, k) f_k; for f = e_m
// only the x^m coefficient of each L_j is needed. Structured O(n^2)
// elimination via synthetic division of the master polynomial.
std::vector<double> vandermonde_moment_solve_em(const std::vector<double>& x, int m) {
  const int n = static_cast<int>(x.size());
  // master(t) = prod_j (t - x_j), ascending coefficients
  std::vector<double> master(n + 1, 0.0);
  master[0] = 1.0;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k >= 1; --k) master[k] = master[k - 1] - x[j] * master[k];
    master[0] *= -x[j];
  }
  std::vector<double> w(n, 0.0);
  std::vector<double> quot(n, 0.0);
  for (int j = 0; j < n; ++j) {
    // synthetic division by (t - x_j): quotient coefficients descending
    quot[n - 1] = master[n];
    for (int k = n - 1; k >= 1; --k) quot[k - 1] = master[k] + x[j] * quot[k];
    double denom = 1.0;
    for (int i = 0; i < n; ++i) {
      if (i != j) denom *= (x[j] - x[i]);
    }
    w[j] = quot[m] / denom;
  }
  return w;
}

}  // namespace

AdmissibleSequence AdmissibleSequence::validate(std::vector<double> alphas,
                                                std::vector<Complex> coeffs, int order,
                                                double tol) {
  if (order < 0) throw std::invalid_argument("admissible: order must be >= 0");
  check_alpha_range(alphas);
  if (alphas.size() != coeffs.size()) {
    throw std::invalid_argument("admissible: alphas and coeffs must have equal length");
  }
  for (const Complex& c : coeffs) require_finite(c, "coefficient");

  double scale = 0.0;
  for (size_t j = 0; j < alphas.size(); ++j) scale += std::abs(coeffs[j]) * alphas[j];
  if (scale == 0.0) scale = 1.0;  // all-zero weights satisfy every moment

  for (int k = 0; k < order; ++k) {
    Complex moment(0.0, 0.0);
    for (size_t j = 0; j < alphas.size(); ++j) {
      moment += coeffs[j] * alphas[j] * std::pow(std::log(alphas[j]), k);
    }
    if (std::abs(moment) > tol * scale) {
      std::ostringstream os;
      os << "moment condition failed at k = " << k << " (|moment|/scale = "
         << std::abs(moment) / scale << ")";
      throw admissible_error(os.str(), k);
    }
  }
  return AdmissibleSequence(std::move(alphas), std::move(coeffs), order);
}

AdmissibleSequence AdmissibleSequence::construct(std::vector<double> alphas, int order) {
  if (order < 0) throw std::invalid_argument("admissible: order must be >= 0");
  check_alpha_range(alphas);
  const int l = static_cast<int>(alphas.size());
  if (l <= order) {
    throw std::invalid_argument("admissible: construct needs length >= order + 1");
  }
  for (int j = 1; j < l; ++j) {
    if (!(alphas[j] > alphas[j - 1])) {
      throw std::invalid_argument("admissible: construct needs strictly increasing alphas");
    }
  }
  // nodes: the first `order` alphas and the last one
  std::vector<int> idx;
  for (int j = 0; j < order; ++j) idx.push_back(j);
  idx.push_back(l - 1);
  std::vector<double> x(idx.size());
  for (size_t j = 0; j < idx.size(); ++j) x[j] = std::log(alphas[idx[j]]);

  const std::vector<double> b = vandermonde_moment_solve_em(x, order);
  std::vector<Complex> coeffs(l, Complex(0.0, 0.0));
  for (size_t j = 0; j < idx.size(); ++j) {
    coeffs[idx[j]] = Complex(b[j] / alphas[idx[j]], 0.0);
  }
  return AdmissibleSequence(std::move(alphas), std::move(coeffs), order);
}

double AdmissibleSequence::max_alpha() const {
  return *std::max_element(alphas_.begin(), alphas_.end());
}

Complex AdmissibleSequence::g(Complex s) const {
  require_finite(s, "g_A");
  Complex acc(0.0, 0.0);
  for (size_t j = 0; j < alphas_.size(); ++j) {
    acc += coeffs_[j] * std::exp(s * std::log(alphas_[j]));
  }
  return acc;
}

Complex AdmissibleSequence::g_derivative(Complex s, int k) const {
  require_finite(s, "g_A derivative");
  if (k < 0) throw std::invalid_argument("g_derivative: k must be >= 0");
  Complex acc(0.0, 0.0);
  for (size_t j = 0; j < alphas_.size(); ++j) {
    const double la = std::log(alphas_[j]);
    acc += coeffs_[j] * std::pow(la, k) * std::exp(s * la);
  }
  return acc;
}

AdmissibleSequence AdmissibleSequence::rescale_power(double exponent) const {
  require_finite(exponent, "rescale_power");
  if (!(exponent > 0.0)) throw std::invalid_argument("rescale_power: exponent must be > 0");
  std::vector<double> a(alphas_.size());
  std::vector<Complex> c(coeffs_.size());
  for (size_t j = 0; j < alphas_.size(); ++j) {
    a[j] = std::pow(alphas_[j], exponent);
    c[j] = coeffs_[j] * std::pow(alphas_[j], 1.0 - exponent);
  }
  return AdmissibleSequence(std::move(a), std::move(c), order_);
}

AdmissibleSequence AdmissibleSequence::rescale_divide(double divisor) const {
  require_finite(divisor, "rescale_divide");
  if (!(divisor >= max_alpha())) {
    throw std::invalid_argument("rescale_divide: divisor must be >= max alpha");
  }
  std::vector<double> a(alphas_.size());
  for (size_t j = 0; j < alphas_.size(); ++j) a[j] = alphas_[j] / divisor;
  return AdmissibleSequence(std::move(a), coeffs_, order_);
}

}  // namespace bnzero
