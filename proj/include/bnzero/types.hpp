#ifndef BNZERO_TYPES_HPP
#define BNZERO_TYPES_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace bnzero {

// Points in the s-plane. All operations reject non-finite components.
using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, const char* what) {
  if (!is_finite(z)) {
    throw std::invalid_argument(std::string(what) + ": non-finite complex argument");
  }
}

inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument(std::string(what) + ": non-finite argument");
  }
}

// Knobs for the series/Euler-Maclaurin evaluators.
struct EvalSettings {
  double target_abs_error = 1e-12;
  int euler_maclaurin_terms = 12;  // Bernoulli correction pairs
  int series_cutoff = 100000;      // hard cap on direct-summation length

  void check() const {
    if (!(target_abs_error > 0.0)) throw std::invalid_argument("EvalSettings: target_abs_error must be > 0");
    if (euler_maclaurin_terms < 1) throw std::invalid_argument("EvalSettings: euler_maclaurin_terms must be >= 1");
    if (series_cutoff < 1) throw std::invalid_argument("EvalSettings: series_cutoff must be >= 1");
  }
};

// psi fails the weighted-L2 membership test
class non_integrable_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gram matrix numerically not PSD beyond tolerance
class gram_conditioning_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// moment condition of an admissible sequence failed; index() is the first bad k
class admissible_error : public std::invalid_argument {
 public:
  admissible_error(const std::string& msg, int failed_moment)
      : std::invalid_argument(msg), failed_moment_(failed_moment) {}
  int failed_moment() const { return failed_moment_; }

 private:
  int failed_moment_;
};

// generic-series coefficient stream ended before the requested index
class coefficients_exhausted_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bnzero

#endif
