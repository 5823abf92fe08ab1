#ifndef BNZERO_ADMISSIBLE_HPP
#define BNZERO_ADMISSIBLE_HPP

#include <vector>

#include "bnzero/types.hpp"

namespace bnzero {

// An m-admissible sequence A = (alpha, c): points alpha_j in (0,1] with
// complex weights c_j whose log-moments sum_j c_j alpha_j (log alpha_j)^k
// vanish for 0 <= k <= m-1. Moment tolerances are relative to
// sum_j |c_j alpha_j|, so validation is scale-invariant.
class AdmissibleSequence {
 public:
  // Checks the moment conditions; throws admissible_error carrying the first
  // failed moment index. Duplicate alphas are allowed here (the conditions
  // are still well-defined).
  static AdmissibleSequence validate(std::vector<double> alphas, std::vector<Complex> coeffs,
                                     int order, double tol = 1e-10);

  // Solves the Vandermonde moment system on the nodes log(alpha_j),
  // j in {1..m, l}, so that moments 0..m-1 vanish and g^(m)(1) = 1; interior
  // coefficients are zero and c_l != 0. Requires l >= m+1, strictly
  // increasing alphas (duplicates make the system singular).
  static AdmissibleSequence construct(std::vector<double> alphas, int order);

  int order() const { return order_; }
  int length() const { return static_cast<int>(alphas_.size()); }
  const std::vector<double>& alphas() const { return alphas_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  double max_alpha() const;

  // g_A(s) = sum_j c_j alpha_j^s (entire function)
  Complex g(Complex s) const;
  // exact k-th derivative: sum_j c_j alpha_j^s (log alpha_j)^k
  Complex g_derivative(Complex s, int k) const;

  // (alpha_j^t, c_j alpha_j^{1-t}): m-admissible for any t > 0
  AdmissibleSequence rescale_power(double exponent) const;
  // (alpha_j / d, c_j): m-admissible for any d >= max alpha_j
  AdmissibleSequence rescale_divide(double divisor) const;

 private:
  AdmissibleSequence(std::vector<double> alphas, std::vector<Complex> coeffs, int order)
      : alphas_(std::move(alphas)), coeffs_(std::move(coeffs)), order_(order) {}

  std::vector<double> alphas_;
  std::vector<Complex> coeffs_;
  int order_ = 0;
};

}  // namespace bnzero

#endif
