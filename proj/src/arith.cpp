#include "qtheta/arith.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace qtheta {
namespace {

Integer ipow(std::uint64_t base, unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Divisors by trial division up to sqrt(n); unordered.
template <typename F>
void for_each_divisor(std::uint64_t n, F&& f) {
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    f(d);
    if (d != n / d) f(n / d);
  }
}

// Single-writer cache of B_0 .. B_k, extended on demand.
class BernoulliCache {
 public:
  Rational get(unsigned k) {
    std::lock_guard lock(mu_);
    while (table_.size() <= k) extend();
    return table_[k];
  }

 private:
  // sum_{j=0..m} C(m+1, j) B_j = 0.
  void extend() {
    const auto m = static_cast<unsigned>(table_.size());
    if (m == 0) {
      table_.emplace_back(1);
      return;
    }
    Rational acc = 0;
    for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * table_[j];
    Rational b = -acc / Rational(m + 1);
    b.canonicalize();
    table_.push_back(b);
  }

  std::mutex mu_;
  std::vector<Rational> table_;
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace

int chi3(std::int64_t n) {
  switch (((n % 3) + 3) % 3) {
    case 1: return 1;
    case 2: return -1;
    default: return 0;
  }
}

Integer sigma(unsigned r, std::uint64_t n) {
  Integer s = 0;
  if (n == 0) return s;
  for_each_divisor(n, [&](std::uint64_t d) { s += ipow(d, r); });
  return s;
}

Integer sigma_twisted(unsigned k_minus_1, const DirichletCharacter& chi,
                      const DirichletCharacter& psi, std::uint64_t n) {
  Integer s = 0;
  if (n == 0) return s;
  for_each_divisor(n, [&](std::uint64_t d) {
    const int c = psi(static_cast<std::int64_t>(d)) * chi(static_cast<std::int64_t>(n / d));
    if (c != 0) s += c * ipow(d, k_minus_1);
  });
  return s;
}

Integer rho_star(unsigned ell, std::uint64_t n) {
  if (ell % 2 != 0) throw std::invalid_argument("rho_star: l must be even");
  const int sign = (ell / 2) % 2 == 0 ? 1 : -1;
  Integer s = 0;
  for_each_divisor(n, [&](std::uint64_t d) {
    const int c = chi3(static_cast<std::int64_t>(n / d)) + sign * chi3(static_cast<std::int64_t>(d));
    if (c != 0) s += c * ipow(d, ell);
  });
  return ipow(3, ell / 2) * s;
}

Integer rho_star_decomposition(unsigned ell, std::uint64_t n) {
  if (ell % 2 != 0) throw std::invalid_argument("rho_star_decomposition: l must be even");
  const int sign = (ell / 2) % 2 == 0 ? 1 : -1;
  const Integer scale = ipow(3, ell / 2);
  Integer s = 0;
  for_each_divisor(n, [&](std::uint64_t d) {
    const Integer c = scale * chi3(static_cast<std::int64_t>(n / d)) +
                      sign * chi3(static_cast<std::int64_t>(d));
    if (c != 0) s += c * ipow(d, ell);
  });
  return s;
}

Integer sigma_star(unsigned ell, std::uint64_t n) {
  if (ell % 2 == 0) throw std::invalid_argument("sigma_star: l must be odd");
  Integer s = sigma(ell, n);
  if (n % 3 == 0) {
    Integer factor;
    mpz_ui_pow_ui(factor.get_mpz_t(), 3, (ell + 1) / 2);
    if (((ell + 1) / 2) % 2 == 1) factor = -factor;
    s += factor * sigma(ell, n / 3);
  }
  return s;
}

Rational bernoulli(unsigned k) { return bernoulli_cache().get(k); }

Rational bernoulli_polynomial(unsigned k, const Rational& x) {
  Rational s = 0;
  Rational xp = 1;  // x^{k-j}, built from j = k downwards
  for (unsigned j = k + 1; j-- > 0;) {
    s += Rational(binomial(k, j)) * bernoulli(j) * xp;
    xp *= x;
  }
  return s;
}

Rational bernoulli_generalized(unsigned k, const DirichletCharacter& psi) {
  if (k == 0) throw std::invalid_argument("bernoulli_generalized: k must be >= 1");
  const unsigned f = psi.conductor();
  Rational s = 0;
  for (unsigned a = 1; a <= f; ++a) {
    const int c = psi(a);
    if (c == 0) continue;
    Rational x{Integer(a), Integer(f)};
    x.canonicalize();
    s += c * bernoulli_polynomial(k, x);
  }
  Rational scale;
  mpz_ui_pow_ui(scale.get_num_mpz_t(), f, k - 1);
  s *= scale;
  s.canonicalize();
  return s;
}

}  // namespace qtheta
