#ifndef BNZERO_CHARACTERS_HPP
#define BNZERO_CHARACTERS_HPP

#include <cstdint>
#include <vector>

#include "bnzero/types.hpp"

namespace bnzero {

// A Dirichlet character stored as its explicit value table mod q.
// validate() enforces the character axioms: values vanish exactly on
// non-units, are unimodular on units, and are completely multiplicative.
class DirichletCharacter {
 public:
  // Returns the validated character or throws std::invalid_argument naming
  // the first violated axiom.
  static DirichletCharacter validate(std::int64_t q, std::vector<Complex> values,
                                     double tol = 1e-9);

  std::int64_t modulus() const { return q_; }
  const std::vector<Complex>& values() const { return values_; }

  // chi(n) for any integer n (reduced mod q).
  Complex value(std::int64_t n) const;

  // principal character: 1 on all units
  bool is_trivial() const { return trivial_; }

  // sum_{n<u} chi(n), exact, strict inequality
  Complex partial_sum(double u) const;

  // exact sup of |partial sums| over one period (finite for non-principal chi)
  double period_sup_bound() const;

 private:
  DirichletCharacter(std::int64_t q, std::vector<Complex> values, bool trivial)
      : q_(q), values_(std::move(values)), trivial_(trivial) {}

  std::int64_t q_ = 1;
  std::vector<Complex> values_;
  bool trivial_ = true;
};

// Kronecker symbol (a|n), extended Jacobi symbol.
int kronecker_symbol(std::int64_t a, std::int64_t n);

// D = 1, or D ≡ 1 (mod 4) squarefree, or D = 4m with m ≡ 2,3 (mod 4) squarefree.
bool is_fundamental_discriminant(std::int64_t D);

// The real character mod |D| given by n -> (D|n); D must be a fundamental
// discriminant.
DirichletCharacter kronecker_character(std::int64_t D);

// 2 sqrt(q) log q; rejects the principal character.
double polya_vinogradov_bound(const DirichletCharacter& chi);

}  // namespace bnzero

#endif
