#ifndef BNZERO_DISTANCE_HPP
#define BNZERO_DISTANCE_HPP

#include <vector>

#include "bnzero/admissible.hpp"
#include "bnzero/psi_kernel.hpp"
#include "bnzero/types.hpp"

namespace bnzero {

// Quadrature controls for the weighted inner products. Integrals are taken
// in u = 1/t coordinates over (1/max_alpha, u_max) with panels separated at
// every kink n/alpha_j; the truncated integrals are exact inner products of
// the truncated functions, so Gram positivity and distance monotonicity are
// structural, independent of u_max.
struct FamilyQuadConfig {
  double u_max = 4000.0;
  int nodes = 24;  // Gauss-Legendre nodes per panel (indicator profile)
  bool parallel = true;
};

// The generator family spanning (a subspace of) K_r: admissible sequences of
// order >= m_L together with the series, the profile and the exponent r.
class GeneratorFamily {
 public:
  GeneratorFamily(SeriesSpec series, PhiProfile profile, double r,
                  std::vector<AdmissibleSequence> generators,
                  FamilyQuadConfig quad = {});

  const SeriesSpec& series() const { return series_; }
  const PhiProfile& profile() const { return profile_; }
  double r() const { return r_; }
  double sigma0() const { return series_.sigma0(); }
  const std::vector<AdmissibleSequence>& generators() const { return generators_; }
  const FamilyQuadConfig& quad() const { return quad_; }

 private:
  SeriesSpec series_;
  PhiProfile profile_;
  double r_;
  std::vector<AdmissibleSequence> generators_;
  FamilyQuadConfig quad_;
};

// f_{A,r}(t) = t^{r-sigma0} sum_j c_j psi(alpha_j / t) on (0, 1];
// exactly zero for t > max alpha_j (no psi evaluation happens there).
Complex f_eval(const GeneratorFamily& fam, const AdmissibleSequence& A, double t);

// Mellin closed form: -L(s+r-sigma0) phihat(s+r-sigma0) g_A(s+r-sigma0) for
// re(s) > sigma0. At s+r-sigma0 = 1 the pole of L is cancelled by the zero
// of g_A; a Taylor/Laurent branch keeps the evaluation stable there.
Complex f_hat(const GeneratorFamily& fam, const AdmissibleSequence& A, Complex s);

// <f_A, f_B> in L^2_*((0,1), dt/t^{1-2 sigma0}), by panel quadrature in
// u = 1/t coordinates (sigma0 drops out of the substituted integral).
Complex inner_product(const GeneratorFamily& fam, const AdmissibleSequence& A,
                      const AdmissibleSequence& B);

// <f_A, t^{conj(lambda)-2 sigma0} chi_(0,1)> = f_hat(lambda): the target
// inner products come from the closed form, not quadrature.
Complex target_inner(const GeneratorFamily& fam, Complex lambda, const AdmissibleSequence& A);

struct DistanceResult {
  double d_sq = 0.0;                   // distance^2, clamped at 0
  std::vector<Complex> coefficients;   // optimal generator coefficients
  double gram_condition = 1.0;         // lambda_max / lambda_min of the Gram matrix
  double residual_check = 0.0;         // unclamped Bessel difference
};

// d_r(lambda)^2 = ||target||^2 - v* G^+ v over the family span, with a
// spectrally regularized pseudo-inverse (relative eigenvalue cutoff 1e-12).
// Throws gram_conditioning_error if the Gram matrix is not numerically PSD.
DistanceResult distance(const GeneratorFamily& fam, Complex lambda);

// Exposed for testing the regularized solve on crafted matrices: returns
// (bessel = v* G^+ v, coefficients, condition).
struct RegularizedSolveResult {
  double bessel;
  std::vector<Complex> coefficients;
  double condition;
};
RegularizedSolveResult solve_regularized(const std::vector<std::vector<Complex>>& gram,
                                         const std::vector<Complex>& v);

// One-generator upper bound for the Dirichlet distance at lambda = 1 - r:
// minimize over c the quadratic int_0^1 |t^{1-r} - c t^r sum_{n<alpha/t}
// chi(n)|^2 dt/t, by direct quadrature of its three coefficient integrals.
struct DirichletUpperResult {
  double d_sq = 0.0;            // minimum of the quadratic (<= trivial bound)
  Complex c_opt{0.0, 0.0};
  double trivial_bound = 0.0;   // 1/(2-2r)
  Complex cross_integral{0.0, 0.0};  // int_0^1 S(alpha/t) dt
  double mass_integral = 0.0;        // int_0^1 t^{2r-1} |S(alpha/t)|^2 dt
};
DirichletUpperResult dirichlet_dr_upper(const DirichletCharacter& chi, double r, double alpha,
                                        std::int64_t terms = 100000);

}  // namespace bnzero

#endif
