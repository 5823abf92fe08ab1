#include "bnzero/discs.hpp"

#include <cmath>
#include <limits>

#include "bnzero/special_functions.hpp"

namespace bnzero {

namespace {

void check_lambda(Complex lambda, double sigma0) {
  require_finite(lambda, "disc lambda");
  if (!(lambda.real() > sigma0)) {
    throw std::domain_error("disc: requires re(lambda) > sigma0");
  }
}

PseudoHyperbolicDisc make_clamped(Complex lambda, double raw_R, double sigma0, double shift) {
  PseudoHyperbolicDisc d;
  d.lambda = lambda;
  d.sigma0 = sigma0;
  d.shift = shift;
  d.clamped = raw_R > 1.0;
  d.R = std::min(1.0, std::max(0.0, raw_R));
  return d;
}

}  // namespace

EuclideanDisc pseudo_to_euclid(const PseudoHyperbolicDisc& d) {
  check_lambda(d.lambda, d.sigma0);
  if (!(d.R >= 0.0 && d.R <= 1.0)) throw std::domain_error("pseudo_to_euclid: R must be in [0, 1]");
  EuclideanDisc e;
  const double a = d.lambda.real();
  const double b = d.lambda.imag();
  if (d.R == 1.0) {
    e.is_half_plane = true;
    e.center = Complex(d.sigma0 + d.shift, 0.0);
    e.radius = std::numeric_limits<double>::infinity();
    return e;
  }
  const double R2 = d.R * d.R;
  e.center = Complex((a + R2 * (a - 2.0 * d.sigma0)) / (1.0 - R2) + d.shift, b);
  e.radius = 2.0 * d.R * (a - d.sigma0) / (1.0 - R2);
  return e;
}

PseudoHyperbolicDisc disc_from_distance(Complex lambda, double d_sq, double r, double sigma0) {
  check_lambda(lambda, sigma0);
  require_finite(d_sq, "d_sq");
  if (d_sq < 0.0) throw std::domain_error("disc_from_distance: d_sq must be >= 0");
  const double trivial = 1.0 / (2.0 * (lambda.real() - sigma0));
  if (d_sq > trivial * (1.0 + 1e-12)) {
    throw std::domain_error("disc_from_distance: d_sq exceeds the trivial bound");
  }
  const double inner = std::max(0.0, 1.0 - 2.0 * (lambda.real() - sigma0) * d_sq);
  return make_clamped(lambda, std::sqrt(inner), sigma0, r - sigma0);
}

PseudoHyperbolicDisc subspace_disc(Complex lambda, double partial_d_sq, double r, double sigma0) {
  return disc_from_distance(lambda, partial_d_sq, r, sigma0);
}

PseudoHyperbolicDisc disc_from_sequence(Complex lambda, const GeneratorFamily& fam,
                                        const AdmissibleSequence& A) {
  const double sigma0 = fam.sigma0();
  check_lambda(lambda, sigma0);
  const double norm_sq = inner_product(fam, A, A).real();
  if (!(norm_sq > 0.0)) {
    throw std::domain_error("disc_from_sequence: generator has zero norm");
  }
  const double fh = std::abs(f_hat(fam, A, lambda));
  const double raw = std::sqrt(2.0 * (lambda.real() - sigma0)) * fh / std::sqrt(norm_sq);
  return make_clamped(lambda, raw, sigma0, fam.r() - sigma0);
}

PseudoHyperbolicDisc order_k_disc(Complex lambda, double d_sq, double r, double sigma0, int k) {
  if (k < 1) throw std::domain_error("order_k_disc: k must be >= 1");
  PseudoHyperbolicDisc base = disc_from_distance(lambda, d_sq, r, sigma0);
  base.R = std::pow(base.R * base.R, 1.0 / (2.0 * k));
  return base;
}

double zeta_disc_psi_l2(double r, double sigma1, NormMode mode,
                        const PsiNormSettings& norm_settings) {
  require_finite(r, "zeta_disc_psi_l2");
  require_finite(sigma1, "zeta_disc_psi_l2");
  if (!(sigma1 < 0.5)) throw std::domain_error("zeta_disc: sigma1 must be < 1/2");
  if (!(r > std::max(0.0, sigma1) && r < 1.0)) {
    throw std::domain_error("zeta_disc: requires max(0, sigma1) < r < 1");
  }
  if (mode == NormMode::Bound) {
    return std::sqrt(c_sigma1(sigma1) *
                     riemann_zeta(Complex(1.0 + 2.0 * (r - sigma1), 0.0)).real());
  }
  const PhiProfile profile = sigma1 == 0.0 ? PhiProfile::indicator() : PhiProfile::power(sigma1);
  return std::sqrt(psi_norm(SeriesSpec::zeta(), profile, r, norm_settings).norm_sq);
}

ZetaDiscReport zeta_explicit_disc_given_norm(Complex lambda, double r, double sigma1, double alpha,
                                             double psi_l2) {
  check_lambda(lambda, 0.0);
  if (!(sigma1 < 0.5)) throw std::domain_error("zeta_disc: sigma1 must be < 1/2");
  if (!(r > std::max(0.0, sigma1) && r < 1.0)) {
    throw std::domain_error("zeta_disc: requires max(0, sigma1) < r < 1");
  }
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error("zeta_disc: alpha must be in (0, 1]");
  }
  const PhiProfile profile = sigma1 == 0.0 ? PhiProfile::indicator() : PhiProfile::power(sigma1);
  const Complex w = lambda + r;
  const double g_num = std::abs(std::pow(Complex(alpha, 0.0), w) - alpha);
  const double denom =
      (std::pow(alpha, r) + alpha) * (psi_l2 + 1.0 / ((1.0 - sigma1) * std::sqrt(2.0 - 2.0 * r)));
  const double F = std::sqrt(2.0 * lambda.real()) * g_num * std::abs(profile.hat(w)) *
                   std::abs(riemann_zeta(w)) / denom;

  ZetaDiscReport report;
  report.F = F;
  report.psi_norm_used = psi_l2;
  report.pseudo = make_clamped(lambda, F, 0.0, r);
  report.disc = pseudo_to_euclid(report.pseudo);
  return report;
}

ZetaDiscReport zeta_explicit_disc(Complex lambda, double r, double sigma1, double alpha,
                                  NormMode mode, const PsiNormSettings& norm_settings) {
  return zeta_explicit_disc_given_norm(lambda, r, sigma1, alpha,
                                       zeta_disc_psi_l2(r, sigma1, mode, norm_settings));
}

DirichletDiscReport dirichlet_disc(Complex lambda, double r, const DirichletCharacter& chi,
                                   DirichletBoundMode mode) {
  check_lambda(lambda, 0.0);
  require_finite(r, "dirichlet_disc r");
  if (chi.is_trivial()) throw std::domain_error("dirichlet_disc: requires a non-trivial character");
  if (!(r > 0.0)) throw std::domain_error("dirichlet_disc: requires r > 0");

  const double B = mode == DirichletBoundMode::ExactPeriodSup ? chi.period_sup_bound()
                                                              : polya_vinogradov_bound(chi);
  const Complex w = lambda + r;
  const double raw = std::sqrt(2.0 * lambda.real()) * std::abs(dirichlet_l(chi, w)) /
                     std::abs(w) * std::sqrt(2.0 * r) / B;

  DirichletDiscReport report;
  report.B = B;
  report.pseudo = make_clamped(lambda, raw, 0.0, r);
  report.disc = pseudo_to_euclid(report.pseudo);
  return report;
}

double dirichlet_real_interval(double r, double d_sq) {
  require_finite(r, "dirichlet_real_interval");
  require_finite(d_sq, "dirichlet_real_interval");
  if (!(r >= 0.5 && r < 1.0)) {
    throw std::domain_error("dirichlet_real_interval: needs 1/2 <= r < 1");
  }
  const double trivial = 1.0 / (2.0 - 2.0 * r);
  if (!(d_sq >= 0.0 && d_sq <= trivial * (1.0 + 1e-12))) {
    throw std::domain_error("dirichlet_real_interval: d_sq outside [0, 1/(2-2r)]");
  }
  const double inner = std::max(0.0, 1.0 - 2.0 * (1.0 - r) * d_sq);
  return 1.0 - (1.0 - r) * std::sqrt(inner);
}

double siegel_threshold(double r, double log_q, double C) {
  require_finite(r, "siegel_threshold");
  require_finite(log_q, "siegel_threshold");
  require_finite(C, "siegel_threshold");
  if (!(r >= 0.5 && r < 1.0)) throw std::domain_error("siegel_threshold: needs 1/2 <= r < 1");
  if (!(log_q > 0.0)) throw std::domain_error("siegel_threshold: needs log q > 0");
  if (!(C > 0.0)) throw std::domain_error("siegel_threshold: needs C > 0");
  const double one_minus_r = 1.0 - r;
  return 1.0 / (2.0 - 2.0 * r) -
         C * C / (2.0 * log_q * log_q * one_minus_r * one_minus_r * one_minus_r);
}

SiegelResult siegel_criterion(double d_sq, double r, double q, double C) {
  require_finite(d_sq, "siegel_criterion");
  if (!(q >= 3.0)) throw std::domain_error("siegel_criterion: needs q >= 3");
  if (!(d_sq >= 0.0)) throw std::domain_error("siegel_criterion: needs d_sq >= 0");
  SiegelResult out;
  out.threshold = siegel_threshold(r, std::log(q), C);
  out.slack = out.threshold - d_sq;
  out.holds = d_sq <= out.threshold;
  return out;
}

}  // namespace bnzero
