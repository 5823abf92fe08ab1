#include "bnzero/distance.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "bnzero/quadrature.hpp"
#include "bnzero/special_functions.hpp"

namespace bnzero {

namespace {

Complex series_value(const SeriesSpec& spec, Complex w) {
  switch (spec.kind()) {
    case SeriesSpec::Kind::Zeta:
      return riemann_zeta(w);
    case SeriesSpec::Kind::Dirichlet:
      return dirichlet_l(spec.character(), w);
    case SeriesSpec::Kind::Generic: {
      // only the direct sum is available for user-supplied coefficients
      if (!(w.real() > 1.0)) {
        throw std::domain_error(
            "series_value: generic series summed directly, needs re > 1");
      }
      Complex acc(0.0, 0.0);
      const std::int64_t N = spec.coefficient_limit();
      for (std::int64_t n = 1; n <= N; ++n) {
        acc += spec.coefficient(n) * std::exp(-w * std::log(static_cast<double>(n)));
      }
      return acc;
    }
  }
  return Complex(0.0, 0.0);
}

// residues p_{-k} of L(s) phihat(s) at s = 1, k = 1..m_L
std::vector<Complex> pole_residues(const SeriesSpec& spec, const PhiProfile& profile) {
  switch (spec.kind()) {
    case SeriesSpec::Kind::Zeta:
      return {profile.hat(Complex(1.0, 0.0))};  // simple pole of zeta, residue 1
    case SeriesSpec::Kind::Dirichlet:
      return {};
    case SeriesSpec::Kind::Generic:
      return spec.residues();
  }
  return {};
}

double min_max_alpha(const AdmissibleSequence& A, const AdmissibleSequence& B) {
  return std::min(A.max_alpha(), B.max_alpha());
}

}  // namespace

GeneratorFamily::GeneratorFamily(SeriesSpec series, PhiProfile profile, double r,
                                 std::vector<AdmissibleSequence> generators,
                                 FamilyQuadConfig quad)
    : series_(std::move(series)),
      profile_(std::move(profile)),
      r_(r),
      generators_(std::move(generators)),
      quad_(quad) {
  require_finite(r, "GeneratorFamily r");
  for (const AdmissibleSequence& A : generators_) {
    if (A.order() < series_.pole_order()) {
      throw std::invalid_argument(
          "GeneratorFamily: every sequence must be at least m_L-admissible");
    }
  }
  // integrability region of r per series kind
  switch (series_.kind()) {
    case SeriesSpec::Kind::Zeta:
      if (!zeta_integrable(r_, profile_.sigma1)) {
        throw std::domain_error(
            "GeneratorFamily: psi not square-integrable (needs r > max(0, sigma1), r != 1)");
      }
      break;
    case SeriesSpec::Kind::Dirichlet:
      if (!(r_ > 0.0)) {
        throw std::domain_error("GeneratorFamily: needs r > 0 for a bounded psi");
      }
      break;
    case SeriesSpec::Kind::Generic:
      if (!(r_ > series_.sigma0())) {
        throw std::domain_error("GeneratorFamily: needs r > sigma0");
      }
      break;
  }
}

Complex f_eval(const GeneratorFamily& fam, const AdmissibleSequence& A, double t) {
  require_finite(t, "f_eval");
  if (!(t > 0.0 && t <= 1.0)) throw std::domain_error("f_eval: t must be in (0, 1]");
  if (t > A.max_alpha()) return Complex(0.0, 0.0);
  Complex acc(0.0, 0.0);
  for (int j = 0; j < A.length(); ++j) {
    acc += A.coeffs()[j] * psi_eval(fam.series(), fam.profile(), A.alphas()[j] / t);
  }
  return std::pow(t, fam.r() - fam.sigma0()) * acc;
}

Complex f_hat(const GeneratorFamily& fam, const AdmissibleSequence& A, Complex s) {
  require_finite(s, "f_hat");
  const double sigma0 = fam.sigma0();
  if (!(s.real() > sigma0)) throw std::domain_error("f_hat: requires re(s) > sigma0");
  const Complex w = s + (fam.r() - sigma0);
  const int m = fam.series().pole_order();

  if (m >= 1 && std::abs(w - 1.0) < 1e-4) {
    // pole-zero cancellation: L(w) phihat(w) = sum_k p_{-k}/(w-1)^k - H(w)
    // and g_A vanishes to order >= m at 1, so expand g_A in its exact
    // Taylor series and pair it with the Laurent data.
    const std::vector<Complex> p = pole_residues(fam.series(), fam.profile());
    const Complex dw = w - 1.0;
    const int terms = A.order() + 12;
    std::vector<Complex> gder(terms + 1);
    double fact = 1.0;
    for (int j = 0; j <= terms; ++j) {
      if (j > 0) fact *= j;
      gder[j] = A.g_derivative(Complex(1.0, 0.0), j) / fact;
    }
    Complex acc(0.0, 0.0);
    for (int k = 1; k <= m; ++k) {
      // T_k = g_A(w)/(w-1)^k; Taylor terms below the admissibility order are
      // zero by assumption
      Complex Tk(0.0, 0.0);
      Complex dwp(1.0, 0.0);
      for (int j = std::max(k, A.order()); j <= terms; ++j) {
        if (j == std::max(k, A.order())) dwp = std::pow(dw, j - k);
        Tk += gder[j] * dwp;
        dwp *= dw;
      }
      acc -= p[k - 1] * Tk;
    }
    if (std::abs(dw) > 1e-7) {
      Complex pole(0.0, 0.0);
      for (int k = 1; k <= m; ++k) pole += p[k - 1] / std::pow(dw, k);
      const Complex regular = series_value(fam.series(), w) * fam.profile().hat(w) - pole;
      acc -= regular * A.g(w);
    }
    return acc;
  }
  return -series_value(fam.series(), w) * fam.profile().hat(w) * A.g(w);
}

Complex target_inner(const GeneratorFamily& fam, Complex lambda, const AdmissibleSequence& A) {
  if (!(lambda.real() > fam.sigma0())) {
    throw std::domain_error("target_inner: requires re(lambda) > sigma0");
  }
  return f_hat(fam, A, lambda);
}

namespace {

// integral over (1/min maxalpha, u_max) of Psi_A(u) conj(Psi_B(u)) u^{-1-2r},
// panels split at every kink n/alpha_j of either generator.
Complex inner_product_impl(const GeneratorFamily& fam, const AdmissibleSequence& A,
                           const AdmissibleSequence& B) {
  const double r = fam.r();
  const double u0 = 1.0 / min_max_alpha(A, B);
  const double u_max = fam.quad().u_max;
  if (u0 >= u_max) {
    throw std::domain_error("inner_product: u_max too small for these generators");
  }
  std::vector<double> alphas(A.alphas());
  alphas.insert(alphas.end(), B.alphas().begin(), B.alphas().end());

  std::vector<double> pts;
  pts.push_back(u0);
  pts.push_back(u_max);
  for (double a : alphas) {
    for (std::int64_t n = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(a * u0)));
         n <= static_cast<std::int64_t>(std::floor(a * u_max)); ++n) {
      const double p = static_cast<double>(n) / a;
      if (p > u0 && p < u_max) pts.push_back(p);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double x, double y) { return std::abs(x - y) <= 1e-11 * std::abs(y); }),
            pts.end());

  const bool singular = fam.profile().sigma1 > 0.0;
  const int n_panels = static_cast<int>(pts.size()) - 1;
  std::vector<Complex> panel_vals(static_cast<size_t>(n_panels), Complex(0.0, 0.0));

  auto integrand_sum = [&](const PanelRule& rule) {
    Complex acc(0.0, 0.0);
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      const double u = rule.nodes[i];
      Complex pa(0.0, 0.0), pb(0.0, 0.0);
      for (int j = 0; j < A.length(); ++j) {
        pa += A.coeffs()[j] * psi_eval(fam.series(), fam.profile(), A.alphas()[j] * u);
      }
      for (int j = 0; j < B.length(); ++j) {
        pb += B.coeffs()[j] * psi_eval(fam.series(), fam.profile(), B.alphas()[j] * u);
      }
      acc += rule.weights[i] * pa * std::conj(pb) * std::pow(u, -1.0 - 2.0 * r);
    }
    return acc;
  };

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (fam.quad().parallel)
#endif
  for (int pi = 0; pi < n_panels; ++pi) {
    const double lo = pts[static_cast<size_t>(pi)];
    const double hi = pts[static_cast<size_t>(pi) + 1];
    if (hi - lo < 1e-13 * hi) continue;
    const PanelRule rule =
        singular ? tanh_sinh_panel(lo, hi) : legendre_panel(lo, hi, fam.quad().nodes);
    panel_vals[static_cast<size_t>(pi)] = integrand_sum(rule);
  }
  return pairwise_sum(panel_vals);
}

}  // namespace

Complex inner_product(const GeneratorFamily& fam, const AdmissibleSequence& A,
                      const AdmissibleSequence& B) {
  return inner_product_impl(fam, A, B);
}

RegularizedSolveResult solve_regularized(const std::vector<std::vector<Complex>>& gram,
                                         const std::vector<Complex>& v) {
  const int n = static_cast<int>(v.size());
  Eigen::MatrixXcd G(n, n);
  Eigen::VectorXcd u(n);
  for (int i = 0; i < n; ++i) {
    u(i) = v[static_cast<size_t>(i)];
    for (int j = 0; j < n; ++j) G(i, j) = gram[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G);
  const Eigen::VectorXd ev = es.eigenvalues();
  const double lmax = ev.maxCoeff();
  const double lmin = ev.minCoeff();
  if (lmax <= 0.0) {
    // zero family mass; nothing to project on
    return {0.0, std::vector<Complex>(static_cast<size_t>(n), Complex(0.0, 0.0)),
            std::numeric_limits<double>::infinity()};
  }
  if (lmin < -1e-10 * lmax) {
    throw gram_conditioning_error("Gram matrix is not numerically PSD (min eigenvalue " +
                                  std::to_string(lmin) + " vs max " + std::to_string(lmax) + ")");
  }
  const double cutoff = 1e-12 * lmax;
  Eigen::VectorXcd y = es.eigenvectors().adjoint() * u;
  double bessel = 0.0;
  Eigen::VectorXcd z = Eigen::VectorXcd::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (ev(i) > cutoff) {
      bessel += std::norm(y(i)) / ev(i);
      z(i) = y(i) / ev(i);
    }
  }
  const Eigen::VectorXcd x = es.eigenvectors() * z;
  std::vector<Complex> coeffs(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) coeffs[static_cast<size_t>(i)] = x(i);
  const double cond = lmin > 0.0 ? lmax / lmin : std::numeric_limits<double>::infinity();
  return {bessel, coeffs, cond};
}

DistanceResult distance(const GeneratorFamily& fam, Complex lambda) {
  require_finite(lambda, "distance lambda");
  const double sigma0 = fam.sigma0();
  if (!(lambda.real() > sigma0)) {
    throw std::domain_error("distance: requires re(lambda) > sigma0");
  }
  const double target_norm_sq = 1.0 / (2.0 * lambda.real() - 2.0 * sigma0);

  const auto& gens = fam.generators();
  const int n = static_cast<int>(gens.size());
  DistanceResult result;
  if (n == 0) {
    result.d_sq = target_norm_sq;
    result.residual_check = target_norm_sq;
    result.gram_condition = 1.0;
    return result;
  }

  // Gram(i,j) = <f_j, f_i>; v_i = <target, f_i> = conj(f_hat_i(lambda))
  std::vector<std::vector<Complex>> gram(static_cast<size_t>(n),
                                         std::vector<Complex>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const Complex e = inner_product(fam, gens[static_cast<size_t>(j)],
                                      gens[static_cast<size_t>(i)]);
      gram[static_cast<size_t>(i)][static_cast<size_t>(j)] = e;
      gram[static_cast<size_t>(j)][static_cast<size_t>(i)] = std::conj(e);
    }
  }
  for (int i = 0; i < n; ++i) {
    // force exactly real diagonal
    gram[static_cast<size_t>(i)][static_cast<size_t>(i)] =
        Complex(gram[static_cast<size_t>(i)][static_cast<size_t>(i)].real(), 0.0);
  }
  std::vector<Complex> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<size_t>(i)] = std::conj(f_hat(fam, gens[static_cast<size_t>(i)], lambda));
  }

  RegularizedSolveResult solved = solve_regularized(gram, v);
  result.residual_check = target_norm_sq - solved.bessel;
  result.d_sq = std::max(0.0, result.residual_check);
  result.coefficients = std::move(solved.coefficients);
  result.gram_condition = solved.condition;
  return result;
}

namespace {

// sum_{n > N} w_{n mod q} (n^{-s} - (n+1)^{-s}) for a q-periodic complex
// weight table; direct up to an anchor, then Hurwitz-difference asymptotics.
Complex periodic_power_diff_tail(const std::vector<Complex>& w, std::int64_t q, double s,
                                 std::int64_t N) {
  Complex tail(0.0, 0.0);
  std::int64_t anchor = N;
  const std::int64_t want = 32 * q;
  if (anchor < want) {
    for (std::int64_t n = N + 1; n <= want; ++n) {
      const Complex ww = w[static_cast<size_t>(n % q)];
      if (ww != Complex(0.0, 0.0)) {
        tail += ww * (std::pow(static_cast<double>(n), -s) -
                      std::pow(static_cast<double>(n + 1), -s));
      }
    }
    anchor = want;
  }
  for (std::int64_t c = 0; c < q; ++c) {
    const Complex ww = w[static_cast<size_t>(c)];
    if (ww == Complex(0.0, 0.0)) continue;
    const std::int64_t m0 = (anchor + 1 - c + q - 1) / q;
    const double x = static_cast<double>(m0) + static_cast<double>(c) / q;
    tail += ww * std::pow(static_cast<double>(q), -s) *
            hurwitz_zeta_diff_asymptotic(s, x, x + 1.0 / static_cast<double>(q));
  }
  return tail;
}

}  // namespace

DirichletUpperResult dirichlet_dr_upper(const DirichletCharacter& chi, double r, double alpha,
                                        std::int64_t terms) {
  if (chi.is_trivial()) {
    throw std::domain_error("dirichlet_dr_upper: requires a non-trivial character");
  }
  require_finite(r, "dirichlet_dr_upper");
  require_finite(alpha, "dirichlet_dr_upper");
  if (!(r >= 0.5 && r < 1.0)) throw std::domain_error("dirichlet_dr_upper: needs 1/2 <= r < 1");
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error("dirichlet_dr_upper: alpha must be in (0, 1]");
  }
  const std::int64_t q = chi.modulus();
  std::vector<Complex> S(static_cast<size_t>(q));      // S_n for n ≡ c (mod q)
  std::vector<Complex> Ssq(static_cast<size_t>(q));    // |S_n|^2 as complex weights
  {
    Complex run(0.0, 0.0);
    for (std::int64_t n = 1; n <= q; ++n) {
      run += chi.value(n);
      S[static_cast<size_t>(n % q)] = run;
      Ssq[static_cast<size_t>(n % q)] = Complex(std::norm(run), 0.0);
    }
  }

  DirichletUpperResult out;
  out.trivial_bound = 1.0 / (2.0 - 2.0 * r);

  // cross integral int_0^1 S(alpha/t) dt = alpha sum_n S_n (1/n - 1/(n+1))
  Complex m0(0.0, 0.0);
  const double s_mass = 2.0 * r;
  double mass = 0.0;
  for (std::int64_t n = 1; n <= terms; ++n) {
    const Complex Sn = S[static_cast<size_t>(n % q)];
    if (Sn == Complex(0.0, 0.0)) continue;
    const double d1 = 1.0 / static_cast<double>(n) - 1.0 / static_cast<double>(n + 1);
    m0 += Sn * d1;
    mass += std::norm(Sn) * (std::pow(static_cast<double>(n), -s_mass) -
                             std::pow(static_cast<double>(n + 1), -s_mass));
  }
  m0 += periodic_power_diff_tail(S, q, 1.0, terms);
  mass += periodic_power_diff_tail(Ssq, q, s_mass, terms).real();
  out.cross_integral = alpha * m0;
  out.mass_integral = std::pow(alpha, 2.0 * r) * mass / (2.0 * r);

  if (!(out.mass_integral > 1e-300)) {
    // degenerate quadratic: no mass to project on
    out.d_sq = out.trivial_bound;
    return out;
  }
  out.c_opt = std::conj(out.cross_integral) / out.mass_integral;
  out.d_sq = out.trivial_bound - std::norm(out.cross_integral) / out.mass_integral;
  out.d_sq = std::min(out.d_sq, out.trivial_bound);
  return out;
}

}  // namespace bnzero
