#pragma once
// Number-theoretic scalar functions: the characters 1 and chi_{-3}, divisor
// sums (plain, twisted, starred), Bernoulli numbers and generalized Bernoulli
// numbers attached to a character.

#include <cstdint>
#include <string_view>

#include "qtheta/rational.hpp"

namespace qtheta {

/// Kronecker symbol (-3/n): +1 for n = 1 mod 3, -1 for n = 2 mod 3, 0 for 3 | n.
/// Defined on all integers (chi3(-1) = -1).
int chi3(std::int64_t n);

/// Dirichlet character of conductor 1 or 3.
class DirichletCharacter {
 public:
  static DirichletCharacter trivial() { return DirichletCharacter(1); }
  static DirichletCharacter minus3() { return DirichletCharacter(3); }

  unsigned conductor() const { return conductor_; }
  bool is_trivial() const { return conductor_ == 1; }
  int operator()(std::int64_t n) const { return conductor_ == 1 ? 1 : chi3(n); }
  /// chi(-1).
  int parity() const { return (*this)(-1); }
  std::string_view name() const { return conductor_ == 1 ? "1" : "chi_-3"; }

  bool operator==(const DirichletCharacter&) const = default;

 private:
  explicit DirichletCharacter(unsigned conductor) : conductor_(conductor) {}
  unsigned conductor_;
};

/// sum_{d | n} d^r, for n >= 1. Returns 0 for n == 0.
Integer sigma(unsigned r, std::uint64_t n);

/// sum_{d | n} psi(d) chi(n/d) d^{k-1}.
Integer sigma_twisted(unsigned k_minus_1, const DirichletCharacter& chi,
                      const DirichletCharacter& psi, std::uint64_t n);

/// 3^{l/2} sum_{d | n} ((n/d | 3) + (-1)^{l/2} (d | 3)) d^l, for even l.
/// This is the closed form as it is usually printed; see
/// rho_star_decomposition for the value that reproduces theta coefficients.
Integer rho_star(unsigned ell, std::uint64_t n);

/// sum_{d | n} (3^{l/2} (n/d | 3) + (-1)^{l/2} (d | 3)) d^l: the Eisenstein
/// part of the level-3 chi_{-3} decompositions of F_7, F_9, F_11, up to the
/// scalar 3/7, 27/809, 3/1847 respectively.
Integer rho_star_decomposition(unsigned ell, std::uint64_t n);

/// sigma_l(n) + (-3)^{(l+1)/2} sigma_l(n/3), with sigma_l(n/3) = 0 for 3 ∤ n.
/// l must be odd.
Integer sigma_star(unsigned ell, std::uint64_t n);

/// B_k with x/(e^x - 1) = sum B_m x^m / m!  (so B_1 = -1/2).
Rational bernoulli(unsigned k);

/// Bernoulli polynomial B_k(x) = sum_j C(k, j) B_j x^{k-j}.
Rational bernoulli_polynomial(unsigned k, const Rational& x);

/// B_{k,psi} = f^{k-1} sum_{a=1..f} psi(a) B_k(a/f), f = conductor(psi).
/// For the trivial character this returns B_k with the B_1 = +1/2 convention
/// (k = 1), and B_k for k >= 2.
Rational bernoulli_generalized(unsigned k, const DirichletCharacter& psi);

}  // namespace qtheta
