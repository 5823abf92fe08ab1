#ifndef BNZERO_DISCS_HPP
#define BNZERO_DISCS_HPP

#include "bnzero/distance.hpp"
#include "bnzero/types.hpp"

namespace bnzero {

// { mu : |(mu - lambda)/(mu + conj(lambda) - 2 sigma0)| < R }, shifted by
// `shift` along the real axis. R = 1 is the shifted half-plane re > sigma0.
struct PseudoHyperbolicDisc {
  Complex lambda;
  double R = 0.0;
  double sigma0 = 0.0;
  double shift = 0.0;   // r - sigma0 in every zero-free statement
  bool clamped = false; // raw formula exceeded 1 and was capped
};

struct EuclideanDisc {
  Complex center{0.0, 0.0};
  double radius = 0.0;
  bool is_half_plane = false;  // when set, center.re is the boundary abscissa
};

// center ((a + R^2 (a - 2 sigma0))/(1-R^2), b), radius 2 R (a - sigma0)/(1-R^2),
// then shifted along the real axis; R = 1 maps to the half-plane.
EuclideanDisc pseudo_to_euclid(const PseudoHyperbolicDisc& d);

// R = sqrt(1 - 2 (re lambda - sigma0) d^2), shift = r - sigma0.
PseudoHyperbolicDisc disc_from_distance(Complex lambda, double d_sq, double r, double sigma0);

// Named alias of disc_from_distance for distances computed over a strict
// sub-family (any subspace distance certifies a smaller disc).
PseudoHyperbolicDisc subspace_disc(Complex lambda, double partial_d_sq, double r, double sigma0);

// Single-sequence disc: R = sqrt(2 (re lambda - sigma0)) |f_hat(lambda)| / ||f||,
// clamped to [0, 1].
PseudoHyperbolicDisc disc_from_sequence(Complex lambda, const GeneratorFamily& fam,
                                        const AdmissibleSequence& A);

// Zeros of order >= k are excluded on the larger radius R^{1/k}:
// R_k = (1 - 2 (re lambda - sigma0) d^2)^{1/(2k)}.
PseudoHyperbolicDisc order_k_disc(Complex lambda, double d_sq, double r, double sigma0, int k);

enum class NormMode { Bound, Computed };

// Explicit zeta-family disc from the two-point generator (alpha, 1):
//   F = sqrt(2 re lambda) |alpha^{lambda+r} - alpha| |phihat(lambda+r)|
//       |zeta(lambda+r)| / ((alpha^r + alpha)(||psi|| + 1/((1-sigma1)sqrt(2-2r))))
// with ||psi|| either the closed bound sqrt(C(sigma1) zeta(1+2(r-sigma1)))
// or the computed norm. Returned as the Euclidean disc (sigma0 = 0, shift r).
struct ZetaDiscReport {
  EuclideanDisc disc;
  PseudoHyperbolicDisc pseudo;
  double F = 0.0;            // pseudo-hyperbolic radius before clamping
  double psi_norm_used = 0.0;
};
ZetaDiscReport zeta_explicit_disc(Complex lambda, double r, double sigma1, double alpha = 0.25,
                                  NormMode mode = NormMode::Bound,
                                  const PsiNormSettings& norm_settings = {});

// The lambda-independent ||psi|| factor of the formula above, so sweeps can
// compute it once.
double zeta_disc_psi_l2(double r, double sigma1, NormMode mode,
                        const PsiNormSettings& norm_settings = {});
ZetaDiscReport zeta_explicit_disc_given_norm(Complex lambda, double r, double sigma1, double alpha,
                                             double psi_l2);

// Dirichlet disc with the indicator profile:
//   R = sqrt(2 re lambda) (|L(chi, lambda+r)| / |lambda+r|) (sqrt(2r)/B),
// B the exact per-period sup of |partial sums| or the Polya-Vinogradov bound.
enum class DirichletBoundMode { ExactPeriodSup, PolyaVinogradov };
struct DirichletDiscReport {
  EuclideanDisc disc;
  PseudoHyperbolicDisc pseudo;
  double B = 0.0;
};
DirichletDiscReport dirichlet_disc(Complex lambda, double r, const DirichletCharacter& chi,
                                   DirichletBoundMode mode = DirichletBoundMode::ExactPeriodSup);

// Real zero-free interval from the distance at lambda = 1 - r:
// sigma > 1 - (1-r) sqrt(1 - 2(1-r) d^2); requires d^2 <= 1/(2-2r).
double dirichlet_real_interval(double r, double d_sq);

// threshold = 1/(2-2r) - C^2 / (2 (log q)^2 (1-r)^3); holds iff d^2 <= threshold.
struct SiegelResult {
  bool holds = false;
  double threshold = 0.0;
  double slack = 0.0;  // threshold - d_sq
};
double siegel_threshold(double r, double log_q, double C);
SiegelResult siegel_criterion(double d_sq, double r, double q, double C);

}  // namespace bnzero

#endif
