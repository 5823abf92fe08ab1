#include "bnzero/psi_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bnzero/quadrature.hpp"
#include "bnzero/special_functions.hpp"

namespace bnzero {

namespace {

// B_{2j}/(2j)! for the short Euler-Maclaurin used on power sums
constexpr double kBf[5] = {0.0, 1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0};

double poch(double s, int k) {
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= (s + i);
  return p;
}

// sum_{m=m_lo}^{m_hi} (x - m)^{-sigma} for x > m_hi; O(1) by splitting off
// the last few terms and applying Euler-Maclaurin to the smooth head.
double em_power_sum(double x, double sigma, std::int64_t m_lo, std::int64_t m_hi) {
  if (m_hi < m_lo) return 0.0;
  if (sigma == 0.0) return static_cast<double>(m_hi - m_lo + 1);
  constexpr std::int64_t kDirect = 48;
  constexpr std::int64_t kMargin = 32;
  double acc = 0.0;
  if (m_hi - m_lo + 1 <= kDirect + kMargin) {
    for (std::int64_t m = m_lo; m <= m_hi; ++m) acc += std::pow(x - m, -sigma);
    return acc;
  }
  for (std::int64_t m = m_hi - kMargin + 1; m <= m_hi; ++m) acc += std::pow(x - m, -sigma);
  const std::int64_t head_hi = m_hi - kMargin;
  // Euler-Maclaurin on g(m) = (x-m)^{-sigma} over [m_lo, head_hi]
  const double a = x - static_cast<double>(m_lo);
  const double b = x - static_cast<double>(head_hi);  // >= kMargin
  acc += (std::pow(a, 1.0 - sigma) - std::pow(b, 1.0 - sigma)) / (1.0 - sigma);
  acc += 0.5 * (std::pow(a, -sigma) + std::pow(b, -sigma));
  for (int j = 1; j <= 4; ++j) {
    const double e = sigma + 2.0 * j - 1.0;
    // g^{(2j-1)}(m) = poch(sigma, 2j-1) (x-m)^{-sigma-2j+1}
    acc += kBf[j] * poch(sigma, 2 * j - 1) * (std::pow(b, -e) - std::pow(a, -e));
  }
  return acc;
}

std::int64_t last_index_below(double u) {
  // largest integer strictly below u
  return static_cast<std::int64_t>(std::ceil(u)) - 1;
}

}  // namespace

PhiProfile PhiProfile::power(double sigma1) {
  require_finite(sigma1, "sigma1");
  if (!(sigma1 < 0.5)) throw std::domain_error("PhiProfile: sigma1 must be < 1/2");
  return PhiProfile{Kind::PowerSingularity, sigma1};
}

double PhiProfile::eval(double t) const {
  require_finite(t, "phi_eval");
  if (t < 0.0) throw std::domain_error("phi_eval: t must be >= 0");
  if (t >= 1.0) return 0.0;
  if (kind == Kind::Indicator) return 1.0;
  return std::pow(1.0 - t, -sigma1);
}

Complex PhiProfile::hat(Complex s) const {
  require_finite(s, "phi_hat");
  if (!(s.real() > 0.0)) throw std::domain_error("phi_hat: requires re(s) > 0");
  if (kind == Kind::Indicator) return 1.0 / s;
  return gamma_complex(s) * gamma_complex(1.0 - sigma1) / gamma_complex(s + 1.0 - sigma1);
}

SeriesSpec SeriesSpec::zeta() {
  SeriesSpec s;
  s.kind_ = Kind::Zeta;
  s.pole_order_ = 1;
  s.sigma0_ = 0.0;
  return s;
}

SeriesSpec SeriesSpec::dirichlet(DirichletCharacter chi) {
  if (chi.is_trivial()) {
    throw std::invalid_argument("SeriesSpec::dirichlet: requires a non-principal character");
  }
  SeriesSpec s;
  s.kind_ = Kind::Dirichlet;
  s.pole_order_ = 0;
  s.sigma0_ = 0.0;
  s.chi_ = std::move(chi);
  return s;
}

SeriesSpec SeriesSpec::generic(std::vector<Complex> coeffs, int pole_order,
                               std::vector<Complex> residues, double sigma0) {
  if (pole_order < 0) throw std::invalid_argument("SeriesSpec: pole order must be >= 0");
  if (static_cast<int>(residues.size()) != pole_order) {
    throw std::invalid_argument("SeriesSpec: need exactly m_L residue coefficients");
  }
  if (!(sigma0 < 1.0)) throw std::invalid_argument("SeriesSpec: sigma0 must be < 1");
  SeriesSpec s;
  s.kind_ = Kind::Generic;
  s.pole_order_ = pole_order;
  s.sigma0_ = sigma0;
  s.coeffs_ = std::move(coeffs);
  s.residues_ = std::move(residues);
  return s;
}

const DirichletCharacter& SeriesSpec::character() const {
  if (!chi_) throw std::logic_error("SeriesSpec: no character attached");
  return *chi_;
}

Complex SeriesSpec::coefficient(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("SeriesSpec: coefficient index must be >= 1");
  switch (kind_) {
    case Kind::Zeta:
      return Complex(1.0, 0.0);
    case Kind::Dirichlet:
      return chi_->value(n);
    case Kind::Generic:
      if (n > static_cast<std::int64_t>(coeffs_.size())) {
        throw coefficients_exhausted_error("SeriesSpec: coefficient stream exhausted");
      }
      return coeffs_[static_cast<size_t>(n - 1)];
  }
  return Complex(0.0, 0.0);
}

std::int64_t SeriesSpec::coefficient_limit() const {
  if (kind_ == Kind::Generic) return static_cast<std::int64_t>(coeffs_.size());
  return std::numeric_limits<std::int64_t>::max();
}

namespace {

// sum_{n=1}^{n_max} a_n (1 - n/u)^{-sigma} with u > n_max, fast path per kind
Complex weighted_profile_sum(const SeriesSpec& spec, double sigma, double u,
                             std::int64_t n_max) {
  if (n_max < 1) return Complex(0.0, 0.0);
  if (n_max > spec.coefficient_limit()) {
    throw coefficients_exhausted_error("psi: coefficient stream exhausted");
  }
  if (sigma == 0.0) {
    switch (spec.kind()) {
      case SeriesSpec::Kind::Zeta:
        return Complex(static_cast<double>(n_max), 0.0);
      case SeriesSpec::Kind::Dirichlet:
        return spec.character().partial_sum(static_cast<double>(n_max) + 0.5);
      case SeriesSpec::Kind::Generic: {
        Complex acc(0.0, 0.0);
        for (std::int64_t n = 1; n <= n_max; ++n) acc += spec.coefficient(n);
        return acc;
      }
    }
  }
  const double us = std::pow(u, sigma);
  switch (spec.kind()) {
    case SeriesSpec::Kind::Zeta:
      return Complex(us * em_power_sum(u, sigma, 1, n_max), 0.0);
    case SeriesSpec::Kind::Dirichlet: {
      // split by residue class: n = qm + c reduces each class to unit steps
      const DirichletCharacter& chi = spec.character();
      const std::int64_t q = chi.modulus();
      const double qs = std::pow(static_cast<double>(q), -sigma);
      Complex acc(0.0, 0.0);
      for (std::int64_t c = 0; c < q; ++c) {
        const Complex v = chi.value(c);
        if (v == Complex(0.0, 0.0)) continue;
        const std::int64_t m_lo = (c == 0) ? 1 : 0;
        const std::int64_t m_hi = (n_max >= c) ? (n_max - c) / q : -1;
        if (m_hi < m_lo) continue;
        acc += v * qs * em_power_sum((u - c) / q, sigma, m_lo, m_hi);
      }
      return us * acc;
    }
    case SeriesSpec::Kind::Generic: {
      Complex acc(0.0, 0.0);
      for (std::int64_t n = 1; n <= n_max; ++n) {
        acc += spec.coefficient(n) * std::pow(u - n, -sigma);
      }
      return us * acc;
    }
  }
  return Complex(0.0, 0.0);
}

}  // namespace

Complex psi_polynomial_part(const SeriesSpec& spec, const PhiProfile& profile, double u) {
  switch (spec.kind()) {
    case SeriesSpec::Kind::Zeta:
      // residue of zeta(s) phihat(s) u^s at s = 1 is phihat(1) u
      return profile.hat(Complex(1.0, 0.0)) * u;
    case SeriesSpec::Kind::Dirichlet:
      return Complex(0.0, 0.0);
    case SeriesSpec::Kind::Generic: {
      // u * sum_k p_{-k} (log u)^{k-1} / (k-1)!
      Complex acc(0.0, 0.0);
      const double lu = std::log(u);
      double fact = 1.0, lp = 1.0;
      for (int k = 1; k <= spec.pole_order(); ++k) {
        acc += spec.residues()[k - 1] * lp / fact;
        lp *= lu;
        fact *= k;
      }
      return acc * u;
    }
  }
  return Complex(0.0, 0.0);
}

Complex psi_eval(const SeriesSpec& spec, const PhiProfile& profile, double u) {
  require_finite(u, "psi_eval");
  if (!(u > 0.0)) throw std::domain_error("psi_eval: u must be > 0");
  return psi_polynomial_part(spec, profile, u) -
         weighted_profile_sum(spec, profile.sigma1, u, last_index_below(u));
}

Complex psi_smooth_on_interval(const SeriesSpec& spec, const PhiProfile& profile, double u,
                               std::int64_t k) {
  return psi_polynomial_part(spec, profile, u) -
         weighted_profile_sum(spec, profile.sigma1, u, k - 1);
}

namespace {

// integral over (k, k+1] of |psi|^2 u^{-1-2r} du. With the power profile,
// psi = A(u) - a_k u^{s1} (u-k)^{-s1} with A smooth on the closed interval,
// so the integrand splits into channels weighted by (u-k)^0, (u-k)^{-s1}
// and (u-k)^{-2s1}; each channel gets the matching Gauss rule.
double interval_contribution(const SeriesSpec& spec, const PhiProfile& profile, double r,
                             std::int64_t k, int nodes) {
  const double s1 = profile.sigma1;
  const double lo = static_cast<double>(k), hi = static_cast<double>(k + 1);
  if (s1 == 0.0) {
    const PanelRule panel = legendre_panel(lo, hi, nodes);
    double acc = 0.0;
    for (size_t i = 0; i < panel.nodes.size(); ++i) {
      const double u = panel.nodes[i];
      const double p = std::abs(psi_smooth_on_interval(spec, profile, u, k + 1));
      acc += panel.weights[i] * p * p * std::pow(u, -1.0 - 2.0 * r);
    }
    return acc;
  }
  const Complex ak = spec.coefficient(k);
  const PanelRule smooth_panel = legendre_panel(lo, hi, nodes);
  double acc = 0.0;
  for (size_t i = 0; i < smooth_panel.nodes.size(); ++i) {
    const double u = smooth_panel.nodes[i];
    const double a = std::abs(psi_smooth_on_interval(spec, profile, u, k));
    acc += smooth_panel.weights[i] * a * a * std::pow(u, -1.0 - 2.0 * r);
  }
  if (ak != Complex(0.0, 0.0)) {
    const PanelRule cross = left_singular_panel(lo, hi, s1, nodes);
    for (size_t i = 0; i < cross.nodes.size(); ++i) {
      const double u = cross.nodes[i];
      const Complex A = psi_smooth_on_interval(spec, profile, u, k);
      acc -= 2.0 * cross.weights[i] * std::real(A * std::conj(ak)) *
             std::pow(u, s1 - 1.0 - 2.0 * r);
    }
    const PanelRule square = left_singular_panel(lo, hi, 2.0 * s1, nodes);
    const double ak2 = std::norm(ak);
    for (size_t i = 0; i < square.nodes.size(); ++i) {
      acc += square.weights[i] * ak2 * std::pow(square.nodes[i], 2.0 * s1 - 1.0 - 2.0 * r);
    }
  }
  return acc;
}

// sum_{k > N} k^{-s} for s > 1 via the asymptotic Hurwitz expansion
double zeta_tail_sum(double s, std::int64_t N) {
  const double x = static_cast<double>(N + 1);
  double acc = std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
  double p = s;
  for (int j = 1; j <= 4; ++j) {
    acc += kBf[j] * p * std::pow(x, -(s + 2.0 * j - 1.0));
    p *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
  }
  return acc;
}

// Analytic tail for the Dirichlet/indicator case: psi is the periodic step
// -S_n on (n, n+1], so the tail over (N+1, infinity) is a residue-class
// combination of Hurwitz zeta differences (stable through 2r = 1).
double dirichlet_indicator_tail(const DirichletCharacter& chi, double r, std::int64_t N) {
  const std::int64_t q = chi.modulus();
  std::vector<double> wsq(static_cast<size_t>(q));
  {
    Complex run(0.0, 0.0);
    for (std::int64_t n = 1; n <= q; ++n) {
      run += chi.value(n);
      wsq[static_cast<size_t>(n % q)] = std::norm(run);
    }
  }
  const double s = 2.0 * r;
  double tail = 0.0;
  // direct part until the asymptotic anchor is comfortably large
  std::int64_t anchor = N;
  const std::int64_t want = 32 * q;
  if (anchor < want) {
    for (std::int64_t n = N + 1; n <= want; ++n) {
      const double w = wsq[static_cast<size_t>(n % q)];
      if (w != 0.0) {
        tail += w * (std::pow(static_cast<double>(n), -s) -
                     std::pow(static_cast<double>(n + 1), -s)) /
                s;
      }
    }
    anchor = want;
  }
  for (std::int64_t c = 0; c < q; ++c) {
    const double w = wsq[static_cast<size_t>(c)];
    if (w == 0.0) continue;
    // smallest m with qm + c >= anchor + 1
    const std::int64_t m0 = (anchor + 1 - c + q - 1) / q;
    const double x = static_cast<double>(m0) + static_cast<double>(c) / q;
    const double y = x + 1.0 / static_cast<double>(q);
    tail += w * std::pow(static_cast<double>(q), -s) * hurwitz_zeta_diff_asymptotic(s, x, y) / s;
  }
  return tail;
}

// Analytic tail for zeta/indicator: psi = u - k on (k, k+1]; Euler-Maclaurin
// over the interval values V(k) = int_0^1 v^2 (k+v)^{-1-2r} dv.
double zeta_indicator_tail(double r, std::int64_t N) {
  const double a = static_cast<double>(N + 1);
  const QuadratureRule& gl = gauss_legendre(32);
  double I = 0.0, V = 0.0, Vp = 0.0;
  for (int i = 0; i < gl.size(); ++i) {
    const double v = 0.5 * (1.0 + gl.nodes[i]);
    const double w = 0.5 * gl.weights[i];
    I += w * v * v * std::pow(a + v, -2.0 * r) / (2.0 * r);
    V += w * v * v * std::pow(a + v, -1.0 - 2.0 * r);
    Vp += w * v * v * (-1.0 - 2.0 * r) * std::pow(a + v, -2.0 - 2.0 * r);
  }
  return I + 0.5 * V - Vp / 12.0;
}

}  // namespace

PsiNormResult psi_norm(const SeriesSpec& spec, const PhiProfile& profile, double r,
                       const PsiNormSettings& settings) {
  require_finite(r, "psi_norm");
  if (!(r > 0.0)) throw std::domain_error("psi_norm: r must be > 0");
  if (settings.k_max < 2) throw std::invalid_argument("psi_norm: k_max must be >= 2");
  if (settings.nodes < 4) throw std::invalid_argument("psi_norm: nodes must be >= 4");
  const std::int64_t k_max = std::min<std::int64_t>(settings.k_max, spec.coefficient_limit());
  const double s1 = profile.sigma1;

  std::vector<double> contrib(static_cast<size_t>(k_max), 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) if (settings.parallel)
#endif
  for (std::int64_t k = 1; k <= k_max; ++k) {
    contrib[static_cast<size_t>(k - 1)] =
        interval_contribution(spec, profile, r, k, settings.nodes);
  }

  // octave block sums over [2^j, min(2^{j+1}-1, k_max)]
  std::vector<double> octave;
  for (int j = 0; (std::int64_t{1} << j) <= k_max; ++j) {
    const std::int64_t lo = std::int64_t{1} << j;
    const std::int64_t hi = std::min((std::int64_t{1} << (j + 1)) - 1, k_max);
    double s = 0.0;
    for (std::int64_t k = lo; k <= hi; ++k) s += contrib[static_cast<size_t>(k - 1)];
    octave.push_back(s);
  }
  int complete = 0;
  while ((std::int64_t{1} << (complete + 1)) <= k_max + 1) ++complete;
  if (settings.detect_divergence && complete >= 6) {
    double geo = 1.0;
    int used = 0;
    bool valid = true;
    for (int j = complete - 1; j >= complete - 3 && j >= 1; --j) {
      if (octave[static_cast<size_t>(j - 1)] <= 0.0) {
        valid = false;
        break;
      }
      geo *= octave[static_cast<size_t>(j)] / octave[static_cast<size_t>(j - 1)];
      ++used;
    }
    if (valid && used > 0 &&
        std::pow(geo, 1.0 / used) >= settings.divergence_ratio_threshold) {
      throw non_integrable_error(
          "psi_norm: interval contributions stopped decaying geometrically; "
          "psi is not in the weighted L^2 space at this r");
    }
  }

  PsiNormResult result;
  result.intervals_used = k_max;
  result.norm_sq = pairwise_sum(contrib);

  const double quad_slop = 1e-14 * std::max(1.0, result.norm_sq);
  switch (spec.kind()) {
    case SeriesSpec::Kind::Zeta:
      if (s1 == 0.0) {
        result.norm_sq += zeta_indicator_tail(r, k_max);
        result.truncation_error_bound = quad_slop;
      } else if (r > s1) {
        // per-interval comparison integral <= C~(s1), weight <= k^{-1-2(r-s1)}
        result.truncation_error_bound =
            quad_slop + c_tilde_sigma1(s1) * zeta_tail_sum(1.0 + 2.0 * (r - s1), k_max);
      } else {
        result.truncation_error_bound = std::numeric_limits<double>::infinity();
      }
      break;
    case SeriesSpec::Kind::Dirichlet:
      if (s1 == 0.0) {
        result.norm_sq += dirichlet_indicator_tail(spec.character(), r, k_max);
        result.truncation_error_bound = quad_slop;
      } else {
        // Abel summation gives |psi(u)| <= 2B (1-k/u)^{-s1} on (k, k+1]
        const double B = spec.character().period_sup_bound();
        const double factor = 4.0 * B * B / (1.0 - 2.0 * s1) *
                              std::pow(1.0 + 1.0 / static_cast<double>(k_max), 2.0 * s1);
        result.truncation_error_bound =
            quad_slop + factor * zeta_tail_sum(1.0 + 2.0 * (r - s1), k_max);
      }
      break;
    case SeriesSpec::Kind::Generic: {
      // geometric extrapolation of the octave block sums; heuristic
      const size_t n = octave.size();
      result.truncation_error_bound = std::numeric_limits<double>::infinity();
      if (n >= 2 && octave[n - 2] > 0.0) {
        const double rho = octave[n - 1] / octave[n - 2];
        if (rho < 0.95) {
          result.truncation_error_bound = quad_slop + octave[n - 1] * rho / (1.0 - rho);
        }
      }
      break;
    }
  }
  return result;
}

double c_sigma1(double sigma1) {
  require_finite(sigma1, "c_sigma1");
  if (!(sigma1 < 0.5)) throw std::domain_error("c_sigma1: sigma1 must be < 1/2");
  const double s1 = sigma1;
  return std::pow(2.0, 3.0 - 2.0 * s1) / ((3.0 - 2.0 * s1) * (1.0 - s1) * (1.0 - s1)) +
         std::pow(2.0, 2.0 - s1) / ((1.0 - s1) * (1.0 - s1)) + 1.0 / (1.0 - 2.0 * s1);
}

double c_tilde_sigma1(double sigma1) {
  if (!(sigma1 < 0.5)) throw std::domain_error("c_tilde_sigma1: sigma1 must be < 1/2");
  const double s = sigma1;
  if (s <= 0.0) {
    const PanelRule panel = legendre_panel(0.0, 1.0, 32);
    double acc = 0.0;
    for (size_t i = 0; i < panel.nodes.size(); ++i) {
      const double v = panel.nodes[i];
      const double f = std::pow(1.0 + v, 1.0 - s) / (1.0 - s) + std::pow(v, -s);
      acc += panel.weights[i] * f * f;
    }
    return acc;
  }
  // ((1+v)^{1-s}/(1-s) + v^{-s})^2 expands into smooth, v^{-s} and v^{-2s} channels
  double acc = 0.0;
  const PanelRule smooth = legendre_panel(0.0, 1.0, 32);
  for (size_t i = 0; i < smooth.nodes.size(); ++i) {
    const double g = std::pow(1.0 + smooth.nodes[i], 1.0 - s) / (1.0 - s);
    acc += smooth.weights[i] * g * g;
  }
  const PanelRule cross = left_singular_panel(0.0, 1.0, s, 32);
  for (size_t i = 0; i < cross.nodes.size(); ++i) {
    acc += 2.0 * cross.weights[i] * std::pow(1.0 + cross.nodes[i], 1.0 - s) / (1.0 - s);
  }
  acc += 1.0 / (1.0 - 2.0 * s);  // integral of v^{-2s}
  return acc;
}

bool zeta_integrable(double r, double sigma1) {
  require_finite(r, "zeta_integrable");
  require_finite(sigma1, "zeta_integrable");
  if (!(sigma1 < 0.5)) throw std::domain_error("zeta_integrable: sigma1 must be < 1/2");
  if (r == 1.0) {
    throw std::domain_error("zeta_integrable: r = 1 is excluded while the pole is present");
  }
  return r > std::max(0.0, sigma1);
}

bool zeta_integrable_convexity(double r, double sigma1, double mu) {
  require_finite(r, "zeta_integrable_convexity");
  if (!(sigma1 < 0.5)) throw std::domain_error("zeta_integrable_convexity: sigma1 must be < 1/2");
  if (!(mu > 0.0 && mu < 0.25)) {
    throw std::domain_error("zeta_integrable_convexity: mu must lie in (0, 1/4)");
  }
  if (r == 1.0) throw std::domain_error("zeta_integrable_convexity: r = 1 is excluded");
  const bool low = r > std::max(0.0, sigma1 / (1.0 - 2.0 * mu)) && r <= 0.5;
  const bool mid = r > std::max(0.5, 1.0 - (1.0 - 2.0 * sigma1) / (4.0 * mu)) && r < 1.0;
  const bool high = r > 1.0;
  return low || mid || high;
}

double selberg_sigma1_threshold(double degree, double r) {
  require_finite(degree, "selberg_sigma1_threshold");
  require_finite(r, "selberg_sigma1_threshold");
  if (!(degree >= 0.0)) throw std::domain_error("selberg_sigma1_threshold: degree must be >= 0");
  if (!(r > 0.0 && r <= 0.5)) {
    throw std::domain_error("selberg_sigma1_threshold: r must lie in (0, 1/2]");
  }
  return 0.5 - 0.5 * (1.0 - r) * degree;
}

}  // namespace bnzero
