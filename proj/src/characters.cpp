#include "bnzero/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace bnzero {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

bool is_squarefree(std::int64_t n) {
  if (n < 0) n = -n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

}  // namespace

DirichletCharacter DirichletCharacter::validate(std::int64_t q, std::vector<Complex> values,
                                                double tol) {
  if (q < 1) throw std::invalid_argument("character: modulus must be >= 1");
  if (static_cast<std::int64_t>(values.size()) != q) {
    throw std::invalid_argument("character: value table length must equal the modulus");
  }
  for (const Complex& v : values) require_finite(v, "character value");

  // zero pattern: values[n] = 0 exactly when gcd(n, q) > 1
  for (std::int64_t n = 0; n < q; ++n) {
    const bool unit = gcd64(n, q) == 1;
    const double mag = std::abs(values[n]);
    if (!unit && mag > tol) {
      std::ostringstream os;
      os << "character axiom violated: value at non-unit residue " << n << " must be 0";
      throw std::invalid_argument(os.str());
    }
    if (unit && std::abs(mag - 1.0) > tol) {
      std::ostringstream os;
      os << "character axiom violated: value at unit residue " << n << " must have modulus 1";
      throw std::invalid_argument(os.str());
    }
  }

  // complete multiplicativity on units
  for (std::int64_t a = 0; a < q; ++a) {
    if (gcd64(a, q) != 1) continue;
    for (std::int64_t b = a; b < q; ++b) {
      if (gcd64(b, q) != 1) continue;
      const Complex lhs = values[(a * b) % q];
      const Complex rhs = values[a] * values[b];
      if (std::abs(lhs - rhs) > tol) {
        std::ostringstream os;
        os << "character axiom violated: multiplicativity fails at (" << a << ", " << b << ")";
        throw std::invalid_argument(os.str());
      }
    }
  }

  bool trivial = true;
  for (std::int64_t n = 0; n < q; ++n) {
    if (gcd64(n, q) == 1 && std::abs(values[n] - Complex(1.0, 0.0)) > tol) {
      trivial = false;
      break;
    }
  }
  // Snap the table to exact zeros off the units; keeps partial sums clean.
  for (std::int64_t n = 0; n < q; ++n) {
    if (gcd64(n, q) != 1) values[n] = Complex(0.0, 0.0);
  }
  return DirichletCharacter(q, std::move(values), trivial);
}

Complex DirichletCharacter::value(std::int64_t n) const {
  std::int64_t m = n % q_;
  if (m < 0) m += q_;
  return values_[m];
}

Complex DirichletCharacter::partial_sum(double u) const {
  require_finite(u, "partial_sum");
  if (u < 0.0) throw std::invalid_argument("partial_sum: u must be >= 0");
  if (u <= 1.0) return Complex(0.0, 0.0);
  // largest integer strictly below u
  const std::int64_t N = static_cast<std::int64_t>(std::ceil(u)) - 1;

  Complex period_total(0.0, 0.0);
  for (const Complex& v : values_) period_total += v;

  const std::int64_t full = N / q_;
  const std::int64_t rem = N % q_;
  Complex acc = static_cast<double>(full) * period_total;
  for (std::int64_t n = 1; n <= rem; ++n) acc += values_[n % q_];
  return acc;
}

double DirichletCharacter::period_sup_bound() const {
  if (trivial_ && q_ > 1) {
    throw std::domain_error("period_sup_bound: partial sums of a principal character are unbounded");
  }
  double sup = 0.0;
  Complex acc(0.0, 0.0);
  for (std::int64_t n = 1; n <= q_; ++n) {
    acc += values_[n % q_];
    sup = std::max(sup, std::abs(acc));
  }
  return sup;
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (n & 1) == 0) return 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int twos = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++twos;
  }
  if (twos & 1) {
    const std::int64_t am8 = ((a % 8) + 8) % 8;
    if (am8 == 3 || am8 == 5) result = -result;  // (a|2) for odd a
  }
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    twos = 0;
    while ((a & 1) == 0) {
      a >>= 1;
      ++twos;
    }
    if (twos & 1) {
      const std::int64_t nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5) result = -result;
    }
    if ((a % 4 == 3) && (n % 4 == 3)) result = -result;  // quadratic reciprocity
    const std::int64_t t = n % a;
    n = a;
    a = t;
  }
  return n == 1 ? result : 0;
}

bool is_fundamental_discriminant(std::int64_t D) {
  if (D == 0) return false;
  const std::int64_t mod4 = ((D % 4) + 4) % 4;
  if (mod4 == 1) return is_squarefree(D);
  if (mod4 == 0) {
    const std::int64_t m = D / 4;
    const std::int64_t mm4 = ((m % 4) + 4) % 4;
    return (mm4 == 2 || mm4 == 3) && is_squarefree(m);
  }
  return false;
}

DirichletCharacter kronecker_character(std::int64_t D) {
  if (!is_fundamental_discriminant(D)) {
    throw std::invalid_argument("kronecker_character: not a fundamental discriminant");
  }
  const std::int64_t q = D < 0 ? -D : D;
  std::vector<Complex> values(static_cast<size_t>(q));
  for (std::int64_t n = 0; n < q; ++n) {
    values[n] = Complex(static_cast<double>(kronecker_symbol(D, n)), 0.0);
  }
  return DirichletCharacter::validate(q, std::move(values));
}

double polya_vinogradov_bound(const DirichletCharacter& chi) {
  if (chi.is_trivial()) {
    throw std::domain_error("polya_vinogradov_bound: requires a non-trivial character");
  }
  const double q = static_cast<double>(chi.modulus());
  return 2.0 * std::sqrt(q) * std::log(q);
}

}  // namespace bnzero
