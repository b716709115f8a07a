#include "qtheta/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qtheta/error.hpp"

namespace qtheta {

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

QSeries::QSeries(std::initializer_list<Rational> coeffs, std::size_t precision)
    : coeffs_(precision + 1) {
  std::size_t i = 0;
  for (const auto& c : coeffs) {
    if (i > precision) break;
    coeffs_[i++] = c;
  }
}

QSeries QSeries::zero(std::size_t precision) {
  return QSeries(std::vector<Rational>(precision + 1));
}

QSeries QSeries::constant(const Rational& c, std::size_t precision) {
  std::vector<Rational> v(precision + 1);
  v[0] = c;
  return QSeries(std::move(v));
}

QSeries QSeries::monomial(std::size_t power, std::size_t precision) {
  std::vector<Rational> v(precision + 1);
  if (power <= precision) v[power] = 1;
  return QSeries(std::move(v));
}

const Rational& QSeries::coefficient(std::size_t n) const {
  if (n > precision()) {
    throw OutOfPrecision("coefficient " + std::to_string(n) +
                         " requested from a series of precision " +
                         std::to_string(precision()));
  }
  return coeffs_[n];
}

QSeries QSeries::truncated(std::size_t new_precision) const {
  if (new_precision >= precision()) return *this;
  return QSeries(std::vector<Rational>(coeffs_.begin(),
                                       coeffs_.begin() + new_precision + 1));
}

QSeries QSeries::shifted(std::size_t s) const {
  std::vector<Rational> v(coeffs_.size());
  for (std::size_t i = s; i < v.size(); ++i) v[i] = coeffs_[i - s];
  return QSeries(std::move(v));
}

QSeries add(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.precision(), b.precision());
  std::vector<Rational> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = a[i] + b[i];
  return QSeries(std::move(v));
}

QSeries sub(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.precision(), b.precision());
  std::vector<Rational> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = a[i] - b[i];
  return QSeries(std::move(v));
}

QSeries scale(const QSeries& a, const Rational& c) {
  std::vector<Rational> v(a.precision() + 1);
  for (std::size_t i = 0; i <= a.precision(); ++i) v[i] = a[i] * c;
  return QSeries(std::move(v));
}

QSeries mul(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.precision(), b.precision());
  std::vector<Rational> v(n + 1);
  Rational term;
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpq_mul(term.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      v[i + j] += term;
    }
  }
  return QSeries(std::move(v));
}

QSeries pow(const QSeries& a, unsigned e) {
  QSeries result = QSeries::constant(1, a.precision());
  QSeries base = a;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

QSeries invert(const QSeries& a) {
  if (sgn(a[0]) == 0) throw ZeroConstantTerm("cannot invert a series with a_0 = 0");
  const std::size_t n = a.precision();
  const Rational inv0 = 1 / a[0];
  std::vector<Rational> b(n + 1);
  b[0] = inv0;
  Rational acc;
  for (std::size_t k = 1; k <= n; ++k) {
    acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (sgn(a[i]) != 0) acc += a[i] * b[k - i];
    }
    b[k] = -inv0 * acc;
  }
  return QSeries(std::move(b));
}

QSeries scale_argument(const QSeries& a, unsigned m) {
  if (m == 0) throw std::invalid_argument("scale_argument: m must be >= 1");
  const std::size_t n = a.precision();
  std::vector<Rational> v(n + 1);
  for (std::size_t i = 0; i * m <= n; ++i) v[i * m] = a[i];
  return QSeries(std::move(v));
}

QSeries linear_combination(std::initializer_list<std::pair<Rational, const QSeries*>> terms) {
  if (terms.size() == 0) throw std::invalid_argument("linear_combination: no terms");
  std::size_t n = terms.begin()->second->precision();
  for (const auto& [c, s] : terms) n = std::min(n, s->precision());
  std::vector<Rational> v(n + 1);
  for (const auto& [c, s] : terms) {
    for (std::size_t i = 0; i <= n; ++i) v[i] += c * (*s)[i];
  }
  return QSeries(std::move(v));
}

}  // namespace qtheta
