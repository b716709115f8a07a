#include <doctest.h>

#include "qtheta/error.hpp"
#include "qtheta/lattice.hpp"

using qtheta::Integer;
using qtheta::IntSequence;

namespace {

// x1^2+x1x2+x2^2 + x3^2+x3x4+x4^2 = n, all four variables enumerated directly
IntSequence four_variable_count(std::size_t n_max) {
  IntSequence out(n_max + 1, 0);
  const long b = 2 * static_cast<long>(n_max);
  for (long a = -b; a <= b; ++a)
    for (long c = -b; c <= b; ++c) {
      const long q1 = a * a + a * c + c * c;
      if (q1 > static_cast<long>(n_max)) continue;
      for (long d = -b; d <= b; ++d)
        for (long e = -b; e <= b; ++e) {
          const long q = q1 + d * d + d * e + e * e;
          if (q <= static_cast<long>(n_max)) out[q] += 1;
        }
    }
  return out;
}

}  // namespace

TEST_CASE("F1 theta series and moments at small n") {
  const auto f = qtheta::enumerate_F1(10);
  const int s2[] = {1, 6, 0, 6, 6, 0, 0, 12, 0, 6, 0};
  for (std::size_t n = 0; n <= 10; ++n) CHECK(f.theta[n] == s2[n]);
  // n = 1: (±1,0), (0,±1), (1,-1), (-1,1)
  CHECK(f.moment(0).values[1] == 6);
  CHECK(f.moment(2).values[1] == 4);
  CHECK(f.moment(4).values[1] == 4);
  CHECK(f.moment(2).values[2] == 0);
}

TEST_CASE("s_4 matches direct four-variable enumeration for n <= 30") {
  const auto direct = four_variable_count(30);
  const auto via = qtheta::s2k_bruteforce(2, 30);
  for (std::size_t n = 0; n <= 30; ++n) CHECK(via[n] == direct[n]);
}

TEST_CASE("convolution is associative and s_{2(a+b)} = s_{2a} * s_{2b}") {
  const auto s1 = qtheta::s2k_bruteforce(1, 40), s2 = qtheta::s2k_bruteforce(2, 40),
             s3 = qtheta::s2k_bruteforce(3, 40);
  CHECK(qtheta::convolve(qtheta::convolve(s1, s2), s3) == qtheta::convolve(s1, qtheta::convolve(s2, s3)));
  CHECK(qtheta::convolve(s2, s3) == qtheta::s2k_bruteforce(5, 40));
  const auto s0 = qtheta::s2k_bruteforce(0, 5);
  CHECK(s0 == IntSequence{1, 0, 0, 0, 0, 0});
}

TEST_CASE("moment tables: odd moments vanish, even moments are non-negative") {
  // odd orders by symmetry x -> -x; checked directly on the F1 enumeration
  const auto f = qtheta::enumerate_F1(60);
  for (std::size_t n = 0; n <= 60; ++n) {
    Integer odd1 = 0, odd3 = 0;
    for (long x1 = -20; x1 <= 20; ++x1)
      for (long x2 = -20; x2 <= 20; ++x2)
        if (static_cast<std::size_t>(x1 * x1 + x1 * x2 + x2 * x2) == n) {
          odd1 += x1;
          odd3 += x1 * x1 * x1;
        }
    CHECK(odd1 == 0);
    CHECK(odd3 == 0);
  }
  const qtheta::LatticeTables t(60);
  for (unsigned k = 1; k <= 8; ++k)
    for (unsigned order : qtheta::kMomentOrders) {
      const auto& m = t.moments(k, order);
      for (std::size_t n = 0; n <= 60; ++n) CHECK(m.values[n] >= 0);
    }
  // M_0 is the representation number
  CHECK(t.moments(4, 0).values == t.representation_numbers(4));
}

TEST_CASE("moment table of k blocks = F1 moment convolved with s_{2(k-1)}") {
  const qtheta::LatticeTables t(50);
  for (unsigned k = 2; k <= 5; ++k)
    for (unsigned order : qtheta::kMomentOrders)
      CHECK(t.moments(k, order).values ==
            qtheta::convolve(t.f1().moment(order).values, t.representation_numbers(k - 1)));
}

TEST_CASE("lattice sum catalog") {
  const auto& cat = qtheta::lomadze_catalog();
  CHECK(cat.size() == 13);
  CHECK_THROWS_AS(qtheta::lomadze_spec("bogus"), qtheta::UnknownSum);
  const auto& l128 = qtheta::lomadze_spec("L_12_8");
  CHECK(l128.blocks == 8);
  CHECK(l128.weight == 12);
  CHECK(qtheta::lomadze_spec("L_10_6").blocks == 6);

  const qtheta::LatticeTables t(20);
  CHECK(qtheta::lomadze_sum(qtheta::lomadze_spec("L_6_2"), t, 1) == 12);
  CHECK(qtheta::lomadze_sum(qtheta::lomadze_spec("S_7_3"), t, 1) == 30);
  CHECK(qtheta::lomadze_sum(qtheta::lomadze_spec("L_10_6"), t, 1) == 120);
  CHECK(qtheta::lomadze_sum(qtheta::lomadze_spec("L_8_4"), t, 1) == 108);
  CHECK_THROWS_AS((void)qtheta::lomadze_sum(l128, t, 21), qtheta::OutOfPrecision);
}
