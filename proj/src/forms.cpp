#include "qtheta/forms.hpp"

#include <cstdlib>
#include <stdexcept>

#include "qtheta/error.hpp"
#include "qtheta/lattice.hpp"

namespace qtheta {
namespace {

QSeries eta(std::initializer_list<EtaFactor> factors, std::size_t precision) {
  return eta_quotient(EtaQuotientSpec{std::vector<EtaFactor>(factors)}, precision);
}

QSeries delta_8_3(std::size_t n) {
  const QSeries a = eta({{1, 12}, {3, 4}}, n);
  const QSeries b = eta({{1, 6}, {3, 4}, {9, 6}}, n);
  const QSeries c = eta({{1, 9}, {3, 4}, {9, 3}}, n);
  return linear_combination({{1, &a}, {81, &b}, {18, &c}});
}

QSeries delta_7_3_chi(std::size_t n) {
  const QSeries e4 = eisenstein_classical(4, n);
  // E_4(z) - E_4(3z) starts at 240 q; dividing by 240 gives the normalized newform.
  const QSeries diff = e4 - scale_argument(e4, 3);
  const QSeries f = scale(diff * eta({{1, 9}, {3, -3}}, n), Rational(1, 240));
  if (n >= 1 && f[1] != 1) {
    throw std::logic_error("Delta_7_3_chi is not normalized: a(1) = " + to_string(f[1]));
  }
  return f;
}

}  // namespace

long EtaQuotientSpec::weighted_exponent() const {
  long s = 0;
  for (const auto& f : factors) s += static_cast<long>(f.scale) * f.exponent;
  return s;
}

QSeries euler_product(std::size_t precision) {
  std::vector<Rational> v(precision + 1);
  v[0] = 1;
  // sum_{k != 0} (-1)^k q^{k(3k-1)/2}, over k = 1, -1, 2, -2, ...
  for (long k = 1;; ++k) {
    const auto p1 = static_cast<std::size_t>(k * (3 * k - 1) / 2);
    if (p1 > precision) break;
    const int sign = k % 2 == 0 ? 1 : -1;
    v[p1] += sign;
    const auto p2 = static_cast<std::size_t>(k * (3 * k + 1) / 2);
    if (p2 <= precision) v[p2] += sign;
  }
  return QSeries(std::move(v));
}

QSeries eta_quotient(const EtaQuotientSpec& spec, std::size_t precision) {
  const long w = spec.weighted_exponent();
  if (w % 24 != 0 || w < 0) {
    throw NonIntegralExponent("sum m*e = " + std::to_string(w) +
                              " is not a non-negative multiple of 24");
  }
  const QSeries base = euler_product(precision);
  QSeries result = QSeries::constant(1, precision);
  for (const auto& f : spec.factors) {
    if (f.scale == 0) throw std::invalid_argument("eta_quotient: scale must be >= 1");
    if (f.exponent == 0) continue;
    QSeries p = pow(scale_argument(base, f.scale), static_cast<unsigned>(std::abs(f.exponent)));
    if (f.exponent < 0) p = invert(p);
    result = result * p;
  }
  return result.shifted(static_cast<std::size_t>(w / 24));
}

QSeries eisenstein_classical(unsigned k, std::size_t precision) {
  if (k < 2 || k % 2 != 0) {
    throw std::invalid_argument("eisenstein_classical: k must be even and >= 2");
  }
  const Rational factor = k == 2 ? Rational(-24) : Rational(-2 * static_cast<int>(k)) / bernoulli(k);
  std::vector<Rational> v(precision + 1);
  v[0] = 1;
  for (std::size_t n = 1; n <= precision; ++n) v[n] = factor * sigma(k - 1, n);
  return QSeries(std::move(v));
}

Rational eisenstein_twisted_constant(unsigned k, const DirichletCharacter& chi,
                                     const DirichletCharacter& psi) {
  if (chi.conductor() > 1) return 0;
  return -bernoulli_generalized(k, psi) / Rational(2 * k);
}

QSeries eisenstein_twisted(unsigned k, const DirichletCharacter& chi,
                           const DirichletCharacter& psi, std::size_t precision) {
  if (k <= 2) throw std::invalid_argument("eisenstein_twisted: k must be > 2");
  if (chi.is_trivial() && psi.is_trivial()) {
    throw std::invalid_argument("eisenstein_twisted: both characters trivial");
  }
  const int expected = k % 2 == 0 ? 1 : -1;
  if (chi.parity() * psi.parity() != expected) {
    throw ParityMismatch("chi(-1) psi(-1) != (-1)^" + std::to_string(k) + " for E_{" +
                         std::to_string(k) + "," + std::string(chi.name()) + "," +
                         std::string(psi.name()) + "}");
  }
  std::vector<Rational> v(precision + 1);
  v[0] = eisenstein_twisted_constant(k, chi, psi);
  for (std::size_t n = 1; n <= precision; ++n) v[n] = sigma_twisted(k - 1, chi, psi, n);
  return QSeries(std::move(v));
}

const std::vector<std::string>& form_catalog() {
  static const std::vector<std::string> names{
      "Delta",           "Delta_6_3",       "Delta_8_3",        "Delta_7_3_chi",
      "Delta_9_3_chi_1", "Delta_9_3_chi_2", "Delta_11_3_chi_1", "Delta_11_3_chi_2",
      "E2",              "E4",              "E6",               "E8",
      "E10",             "E12",             "E14",              "E2_3z_Delta"};
  return names;
}

NamedForm named_form(std::string_view name, std::size_t n) {
  const auto chi = DirichletCharacter::minus3();
  const auto one = DirichletCharacter::trivial();
  if (name == "Delta") return {"Delta", 12, 1, one, true, eta({{1, 24}}, n)};
  if (name == "Delta_6_3") return {"Delta_6_3", 6, 3, one, true, eta({{1, 6}, {3, 6}}, n)};
  if (name == "Delta_8_3") return {"Delta_8_3", 8, 3, one, true, delta_8_3(n)};
  if (name == "Delta_7_3_chi") return {"Delta_7_3_chi", 7, 3, chi, true, delta_7_3_chi(n)};
  if (name == "Delta_9_3_chi_1") {
    return {"Delta_9_3_chi_1", 9, 3, chi, true, eta({{1, 3}, {3, 15}}, n)};
  }
  if (name == "Delta_9_3_chi_2") {
    return {"Delta_9_3_chi_2", 9, 3, chi, true, eta({{1, 15}, {3, 3}}, n)};
  }
  if (name == "Delta_11_3_chi_1") {
    return {"Delta_11_3_chi_1", 11, 3, chi, true, eisenstein_classical(4, n) * delta_7_3_chi(n)};
  }
  if (name == "Delta_11_3_chi_2") {
    return {"Delta_11_3_chi_2", 11, 3, chi, true,
            scale_argument(eisenstein_classical(4, n), 3) * delta_7_3_chi(n)};
  }
  if (name == "E2_3z_Delta") return {"E2_3z_Delta", 14, 3, one, true, quasimodular_combination(n)};
  if (name.size() >= 2 && name[0] == 'E') {
    const std::string digits(name.substr(1));
    if (digits == "2" || digits == "4" || digits == "6" || digits == "8" || digits == "10" ||
        digits == "12" || digits == "14") {
      const int k = std::stoi(digits);
      return {std::string(name), k, 1, one, false, eisenstein_classical(k, n)};
    }
  }
  throw UnknownForm("'" + std::string(name) + "'");
}

QSeries theta_Fk(unsigned k, std::size_t precision) {
  if (k == 0) throw std::invalid_argument("theta_Fk: k must be >= 1");
  return pow(enumerate_F1(precision).theta, k);
}

QSeries quasimodular_combination(std::size_t precision) {
  const QSeries e2 = eisenstein_classical(2, precision);
  const QSeries combo = scale(Rational(3) * scale_argument(e2, 3) - e2, Rational(1, 2));
  return combo * eta({{1, 24}}, precision);
}

}  // namespace qtheta
