#pragma once
// Truncated formal power series in q with exact rational coefficients.
//
// A QSeries of precision N stores the coefficients of q^0 .. q^N and is known
// modulo q^{N+1}. Binary operations truncate to the smaller precision of the
// two operands. Values are immutable once built; every operation returns a new
// series.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qtheta/rational.hpp"

namespace qtheta {

inline constexpr std::size_t kDefaultPrecision = 200;

class QSeries {
 public:
  /// Precision-0 zero series.
  QSeries() : coeffs_(1) {}

  /// Takes ownership of coeffs; precision is coeffs.size() - 1. An empty
  /// vector is promoted to the precision-0 zero series.
  explicit QSeries(std::vector<Rational> coeffs);
  QSeries(std::initializer_list<Rational> coeffs, std::size_t precision);

  static QSeries zero(std::size_t precision);
  static QSeries constant(const Rational& c, std::size_t precision);
  /// q^power (zero if power > precision).
  static QSeries monomial(std::size_t power, std::size_t precision);
  template <typename Seq>
  static QSeries from_sequence(const Seq& seq) {
    std::vector<Rational> v;
    v.reserve(seq.size());
    for (const auto& x : seq) v.emplace_back(x);
    return QSeries(std::move(v));
  }

  std::size_t precision() const { return coeffs_.size() - 1; }

  /// Checked access; throws OutOfPrecision for n > precision().
  const Rational& coefficient(std::size_t n) const;
  /// Unchecked access.
  const Rational& operator[](std::size_t n) const { return coeffs_[n]; }

  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Drops coefficients above new_precision (no-op if already lower).
  QSeries truncated(std::size_t new_precision) const;

  /// Multiplication by q^s; the top s coefficients fall off.
  QSeries shifted(std::size_t s) const;

  bool operator==(const QSeries& other) const = default;

 private:
  std::vector<Rational> coeffs_;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, const Rational& c);
/// Schoolbook Cauchy product truncated at min(precision).
QSeries mul(const QSeries& a, const QSeries& b);
/// Binary powering; pow(a, 0) is the constant 1 at a's precision.
QSeries pow(const QSeries& a, unsigned e);
/// Multiplicative inverse via b_0 = 1/a_0, b_n = -(1/a_0) sum_{i=1..n} a_i b_{n-i}.
/// Throws ZeroConstantTerm when a_0 == 0.
QSeries invert(const QSeries& a);
/// f(z) -> f(mz), i.e. q -> q^m, keeping the precision. m must be >= 1.
QSeries scale_argument(const QSeries& a, unsigned m);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator-(const QSeries& a) { return scale(a, Rational(-1)); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator*(const Rational& c, const QSeries& a) { return scale(a, c); }

/// Linear combination sum c_i * s_i. All terms must be non-empty.
QSeries linear_combination(std::initializer_list<std::pair<Rational, const QSeries*>> terms);

}  // namespace qtheta
