#ifndef BNZERO_PSI_KERNEL_HPP
#define BNZERO_PSI_KERNEL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bnzero/characters.hpp"
#include "bnzero/types.hpp"

namespace bnzero {

// Test-function profile phi on [0, infinity), supported on [0, 1):
// Indicator is the characteristic function of (0,1); PowerSingularity is
// (1-t)^{-sigma1} with sigma1 < 1/2. sigma1 = 0 makes the two coincide.
struct PhiProfile {
  enum class Kind { Indicator, PowerSingularity };

  Kind kind = Kind::Indicator;
  double sigma1 = 0.0;

  static PhiProfile indicator() { return PhiProfile{Kind::Indicator, 0.0}; }
  static PhiProfile power(double sigma1);

  // phi(t); t >= 1 returns 0 by the support convention.
  double eval(double t) const;

  // Mellin transform: 1/s for the indicator,
  // Gamma(s) Gamma(1-sigma1) / Gamma(s+1-sigma1) for the power profile.
  // Requires re(s) > 0.
  Complex hat(Complex s) const;
};

// Which Dirichlet series L(s) = sum a_n n^{-s} is in play.
//   Zeta:      a_n = 1, simple pole at 1, sigma0 = 0.
//   Dirichlet: a_n = chi(n) for a non-principal character, entire, sigma0 = 0.
//   Generic:   finite coefficient table a_1..a_N; the caller supplies the
//              residue data p_{-k} of L(s) phihat(s) at s = 1 (k = 1..m_L)
//              and an abscissa sigma0 < 1. Residues of unknown continuations
//              are never computed here.
class SeriesSpec {
 public:
  enum class Kind { Zeta, Dirichlet, Generic };

  static SeriesSpec zeta();
  static SeriesSpec dirichlet(DirichletCharacter chi);
  static SeriesSpec generic(std::vector<Complex> coeffs, int pole_order,
                            std::vector<Complex> residues, double sigma0);

  Kind kind() const { return kind_; }
  int pole_order() const { return pole_order_; }
  double sigma0() const { return sigma0_; }
  const DirichletCharacter& character() const;
  const std::vector<Complex>& residues() const { return residues_; }

  // a_n; throws coefficients_exhausted_error past the generic table.
  Complex coefficient(std::int64_t n) const;
  // largest index the coefficient stream can serve (INT64_MAX for Zeta/Dirichlet)
  std::int64_t coefficient_limit() const;

 private:
  SeriesSpec() = default;
  Kind kind_ = Kind::Zeta;
  int pole_order_ = 1;
  double sigma0_ = 0.0;
  std::optional<DirichletCharacter> chi_;
  std::vector<Complex> coeffs_;
  std::vector<Complex> residues_;  // p_{-1}.. p_{-m_L} of L(s) phihat(s); empty for Zeta (computed from phi)
};

// psi(u) = res(L(s) phihat(s) u^s, s=1) - sum_{n<u} a_n phi(n/u).
// For Zeta the polynomial part is phihat(1) u; for a nonprincipal Dirichlet
// character it vanishes. Large-u sums for the power profile are evaluated by
// Euler-Maclaurin in O(1) per call.
Complex psi_eval(const SeriesSpec& spec, const PhiProfile& profile, double u);

// The polynomial part psi1(u) alone.
Complex psi_polynomial_part(const SeriesSpec& spec, const PhiProfile& profile, double u);

// psi on (k, k+1] with the singular n = k summand removed:
// psi(u) = psi_smooth_on_interval(u, k) - a_k u^{sigma1} (u-k)^{-sigma1}.
Complex psi_smooth_on_interval(const SeriesSpec& spec, const PhiProfile& profile, double u,
                               std::int64_t k);

struct PsiNormSettings {
  std::int64_t k_max = 10000;  // interval cutoff for (1, infinity)
  int nodes = 32;              // Gauss nodes per interval and channel
  bool parallel = true;
  // octave-block divergence test: non-integrable when the trailing
  // block-sum ratios stop decaying geometrically
  double divergence_ratio_threshold = 0.99;
  bool detect_divergence = true;
};

struct PsiNormResult {
  double norm_sq = 0.0;                // quadrature over (1, k_max+1) plus analytic tail where available
  double truncation_error_bound = 0.0; // bound on the mass beyond what norm_sq accounts for
  std::int64_t intervals_used = 0;
};

// ||psi||^2 in L^2((1,infinity), du/u^{1+2r}) by per-interval quadrature with
// Gauss-Jacobi treatment of the (u-k)^{-sigma1} endpoint singularity.
// Throws non_integrable_error when the octave detector fires.
PsiNormResult psi_norm(const SeriesSpec& spec, const PhiProfile& profile, double r,
                       const PsiNormSettings& settings = {});

// C(sigma1) from the uniform per-interval comparison bound; sigma1 < 1/2.
double c_sigma1(double sigma1);

// Numerical value of the unit-interval comparison integral
// integral_0^1 ((1+v)^{1-s1}/(1-s1) + v^{-s1})^2 dv (<= c_sigma1(s1)).
double c_tilde_sigma1(double sigma1);

// Sharp membership rule for zeta with the power profile: r > max(0, sigma1)
// (r = 1 is rejected while the pole is present).
bool zeta_integrable(double r, double sigma1);

// Convexity-based sufficient conditions (secondary diagnostic); mu is the
// growth exponent of zeta on the critical line, default 32/205.
bool zeta_integrable_convexity(double r, double sigma1, double mu = 32.0 / 205.0);

// sigma1 threshold 1/2 - (1-r) d / 2 for a degree-d series, 0 < r <= 1/2.
double selberg_sigma1_threshold(double degree, double r);

}  // namespace bnzero

#endif
