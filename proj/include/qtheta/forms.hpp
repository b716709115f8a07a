#pragma once
// q-expansions of the modular and quasimodular forms used by the identities:
// eta quotients, classical and character-twisted Eisenstein series, the
// level-1/level-3 cusp forms, and theta series of F_k.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qtheta/arith.hpp"
#include "qtheta/series.hpp"

namespace qtheta {

struct EtaFactor {
  unsigned scale = 1;  // m in eta(m z)
  int exponent = 0;
};

/// prod eta(m z)^e. Only quotients whose total q-exponent sum(m e)/24 is an
/// integer are admitted.
struct EtaQuotientSpec {
  std::vector<EtaFactor> factors;

  /// sum m * e.
  long weighted_exponent() const;
};

/// prod_{n >= 1} (1 - q^n), from Euler's pentagonal number theorem.
QSeries euler_product(std::size_t precision);

/// q^{sum(m e)/24} prod_m prod_{n >= 1} (1 - q^{mn})^{e_m}.
/// Throws NonIntegralExponent if sum(m e) is not a non-negative multiple of 24.
QSeries eta_quotient(const EtaQuotientSpec& spec, std::size_t precision);

/// E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n for even k >= 4, and
/// E_2 = 1 - 24 sum sigma(n) q^n.
QSeries eisenstein_classical(unsigned k, std::size_t precision);

/// Constant term of E_{k,chi,psi}: 0 if conductor(chi) > 1, else -B_{k,psi}/(2k).
Rational eisenstein_twisted_constant(unsigned k, const DirichletCharacter& chi,
                                     const DirichletCharacter& psi);

/// E_{k,chi,psi} = c_0 + sum_n (sum_{d|n} psi(d) chi(n/d) d^{k-1}) q^n.
/// Requires k > 2, chi(-1) psi(-1) = (-1)^k (ParityMismatch otherwise) and a
/// non-trivial pair of characters.
QSeries eisenstein_twisted(unsigned k, const DirichletCharacter& chi,
                           const DirichletCharacter& psi, std::size_t precision);

struct NamedForm {
  std::string name;
  int weight = 0;
  int level = 1;
  DirichletCharacter character = DirichletCharacter::trivial();
  bool cusp = false;
  QSeries series;
};

/// Names accepted by named_form.
const std::vector<std::string>& form_catalog();

/// Builds a catalog form. Throws UnknownForm for names outside form_catalog().
///
///   Delta             eta(z)^24
///   Delta_6_3         eta^6(z) eta^6(3z)
///   Delta_8_3         eta^12(z) eta^4(3z) + 81 eta^6(z) eta^4(3z) eta^6(9z)
///                     + 18 eta^9(z) eta^4(3z) eta^3(9z)
///   Delta_7_3_chi     (E_4(z) - E_4(3z)) eta^9(z) eta^-3(3z) / 240
///   Delta_9_3_chi_1   eta^3(z) eta^15(3z)
///   Delta_9_3_chi_2   eta^15(z) eta^3(3z)
///   Delta_11_3_chi_1  E_4(z) Delta_7_3_chi
///   Delta_11_3_chi_2  E_4(3z) Delta_7_3_chi
///   E2, E4, ..., E14  classical Eisenstein series
///   E2_3z_Delta       (3 E_2(3z) - E_2(z)) Delta / 2
NamedForm named_form(std::string_view name, std::size_t precision);

/// Theta series of F_k: the k-th power of the F_1 theta series.
QSeries theta_Fk(unsigned k, std::size_t precision);

/// (3 E_2(3z) - E_2(z)) Delta(z) / 2.
QSeries quasimodular_combination(std::size_t precision);

}  // namespace qtheta
