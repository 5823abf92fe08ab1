#ifndef BNZERO_SPECIAL_FUNCTIONS_HPP
#define BNZERO_SPECIAL_FUNCTIONS_HPP

#include "bnzero/characters.hpp"
#include "bnzero/types.hpp"

namespace bnzero {

// Gamma(s) by the 9-term Lanczos approximation (g = 7), reflection formula
// for re(s) < 1/2. Throws std::domain_error at the poles.
Complex gamma_complex(Complex s);

// Riemann zeta by Euler-Maclaurin with N ~ max(20, |im s|) direct terms and
// fixed Bernoulli corrections. Absolute error <= ~1e-10 inside the declared
// window (see zeta_window_contains); values are still returned outside it.
Complex riemann_zeta(Complex s, const EvalSettings& settings = {});

// Hurwitz zeta(s, a) for 0 < a <= 1, same method and window.
Complex hurwitz_zeta(Complex s, double a, const EvalSettings& settings = {});

// L(chi, s) via q^{-s} sum_a chi(a) zeta(s, a/q). For non-principal chi the
// Hurwitz pole terms are combined with a stable expm1 formula, so s = 1 is a
// regular point (this is how L(chi, 1) is produced).
Complex dirichlet_l(const DirichletCharacter& chi, Complex s, const EvalSettings& settings = {});

// Gamma(x) Gamma(y) / Gamma(x + y), x, y > 0.
double beta_fn(double x, double y);

// Declared accuracy window for the zeta-family evaluators.
bool zeta_window_contains(Complex s);

// Difference zeta(s, x) - zeta(s, y) for large x, y (asymptotic
// Euler-Maclaurin only, no direct terms); stable through s = 1, where the
// pole parts cancel into log(y/x). Used for the analytic tails of slowly
// converging weighted series. Requires x, y >= 16, real s > 0.
double hurwitz_zeta_diff_asymptotic(double s, double x, double y,
                                    const EvalSettings& settings = {});

}  // namespace bnzero

#endif
