#include <doctest.h>

#include <random>

#include "qtheta/error.hpp"
#include "qtheta/series.hpp"

using qtheta::QSeries;
using qtheta::Rational;

namespace {

QSeries random_series(std::mt19937& rng, std::size_t n, bool unit_constant = false) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  std::vector<Rational> v(n + 1);
  for (auto& c : v) {
    c = Rational(num(rng), den(rng));
    c.canonicalize();
  }
  if (unit_constant) v[0] = 1;
  return QSeries(std::move(v));
}

}  // namespace

TEST_CASE("basic construction and access") {
  const QSeries a({1, 2, 3}, 4);
  CHECK(a.precision() == 4);
  CHECK(a[1] == 2);
  CHECK(a[4] == 0);
  CHECK_THROWS_AS((void)a.coefficient(5), qtheta::OutOfPrecision);
  CHECK(QSeries::monomial(2, 4).shifted(1) == QSeries::monomial(3, 4));
  CHECK(QSeries::monomial(5, 4) == QSeries::zero(4));
  CHECK(a.truncated(1).precision() == 1);
}

TEST_CASE("(1 - q)^-1 is the geometric series") {
  const QSeries g = qtheta::invert(QSeries({1, -1}, 10));
  for (std::size_t n = 0; n <= 10; ++n) CHECK(g[n] == 1);
  CHECK_THROWS_AS(qtheta::invert(QSeries({0, 1}, 3)), qtheta::ZeroConstantTerm);
}

TEST_CASE("(1 + q)^5 matches binomial coefficients") {
  const QSeries p = qtheta::pow(QSeries({1, 1}, 8), 5);
  const int binom[] = {1, 5, 10, 10, 5, 1, 0, 0, 0};
  for (std::size_t n = 0; n <= 8; ++n) CHECK(p[n] == binom[n]);
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, 25), b = random_series(rng, 25), c = random_series(rng, 25);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a - a == QSeries::zero(25));
    CHECK(a * QSeries::constant(1, 25) == a);
  }
}

TEST_CASE("invert composed with mul is the identity") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_series(rng, 30);
    if (a[0] == 0) continue;
    CHECK(a * qtheta::invert(a) == QSeries::constant(1, 30));
    const auto b = random_series(rng, 30);
    // long division oracle: b / a computed term by term
    std::vector<Rational> quot(31);
    for (std::size_t n = 0; n <= 30; ++n) {
      Rational r = b[n];
      for (std::size_t i = 1; i <= n; ++i) r -= a[i] * quot[n - i];
      quot[n] = r / a[0];
    }
    CHECK(b * qtheta::invert(a) == QSeries(quot));
  }
}

TEST_CASE("pow agrees with repeated mul") {
  std::mt19937 rng(4242);
  const auto a = random_series(rng, 20, true);
  QSeries acc = QSeries::constant(1, 20);
  for (unsigned e = 0; e <= 9; ++e) {
    CHECK(qtheta::pow(a, e) == acc);
    acc = acc * a;
  }
}

TEST_CASE("scale_argument is a ring homomorphism") {
  std::mt19937 rng(99);
  const auto a = random_series(rng, 40), b = random_series(rng, 40);
  for (unsigned m : {1u, 2u, 3u, 5u}) {
    CHECK(qtheta::scale_argument(a * b, m) ==
          qtheta::scale_argument(a, m) * qtheta::scale_argument(b, m));
  }
  const auto s = qtheta::scale_argument(a, 3);
  for (std::size_t n = 0; n <= 40; ++n) CHECK(s[n] == (n % 3 == 0 ? a[n / 3] : Rational(0)));
}

TEST_CASE("mul truncates at the lower precision") {
  const QSeries a({1, 1}, 3), b({1, 1}, 10);
  CHECK((a * b).precision() == 3);
}

TEST_CASE("linear_combination") {
  const QSeries a({1, 2}, 2), b({0, 1, 1}, 2);
  const QSeries c = qtheta::linear_combination({{Rational(2), &a}, {Rational(-1, 2), &b}});
  CHECK(c == QSeries({2, Rational(7, 2), Rational(-1, 2)}, 2));
}
