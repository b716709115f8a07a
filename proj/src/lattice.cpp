#include "qtheta/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "qtheta/error.hpp"

namespace qtheta {
namespace {

std::size_t moment_index(unsigned t) {
  for (std::size_t i = 0; i < kMomentOrders.size(); ++i) {
    if (kMomentOrders[i] == t) return i;
  }
  throw std::invalid_argument("moment order must be one of 0, 2, 4, 6, 8; got " +
                              std::to_string(t));
}

std::int64_t isqrt(std::int64_t v) {
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

Integer x_pow(std::int64_t x, unsigned t) {
  Integer base(static_cast<long>(x));
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), t);
  return r;
}

PolyTerm term(unsigned t, std::vector<long long> n_poly) {
  return PolyTerm{std::move(n_poly), t};
}

std::vector<LomadzeSumSpec> build_catalog() {
  std::vector<LomadzeSumSpec> c;
  // weight 12, from the 24-variable comparison
  c.push_back({"L_12_8", 12, 8, {term(4, {135}), term(2, {0, -54}), term(0, {0, 0, 2})}});
  c.push_back({"L_12_6", 12, 6,
               {term(6, {162}), term(4, {0, -162}), term(2, {0, 0, 36}), term(0, {0, 0, 0, -1})}});
  c.push_back({"L_12_4", 12, 4,
               {term(8, {1215}), term(6, {0, -2268}), term(4, {0, 0, 1260}),
                term(2, {0, 0, 0, -210}), term(0, {0, 0, 0, 0, 5})}});
  c.push_back({"L_8_4", 8, 4, {term(4, {45}), term(2, {0, -30}), term(0, {0, 0, 2})}});
  c.push_back({"L_6_2", 6, 2, {term(4, {9}), term(2, {0, -9}), term(0, {0, 0, 1})}});
  // 164025 x^8 - 306180 n x^6 + 45(3780 n^2 - 4121) x^4
  //   - 30(945 n^2 - 4121) n x^2 + 675 n^4 - 8242 n^2
  c.push_back({"Lcal_4", 12, 4,
               {term(8, {164025}), term(6, {0, -306180}), term(4, {-185445, 0, 170100}),
                term(2, {0, 123630, 0, -28350}), term(0, {0, 0, -8242, 0, 675})}});
  // weight 14, from the 28-variable comparison
  c.push_back({"L_14_10", 14, 10, {term(4, {99}), term(2, {0, -33}), term(0, {0, 0, 1})}});
  c.push_back({"L_14_8", 14, 8,
               {term(6, {594}), term(4, {0, -495}), term(2, {0, 0, 90}), term(0, {0, 0, 0, -2})}});
  c.push_back({"L_14_6", 14, 6,
               {term(8, {8019}), term(6, {0, -12474}), term(4, {0, 0, 5670}),
                term(2, {0, 0, 0, -756}), term(0, {0, 0, 0, 0, 14})}});
  // n x^2 coefficient is 21 (the value 27 that circulates in older sources is wrong)
  c.push_back({"L_10_6", 10, 6, {term(4, {42}), term(2, {0, -21}), term(0, {0, 0, 1})}});
  // level-3 chi_{-3} newform coefficients at weights 7, 9, 11
  c.push_back({"S_7_3", 7, 3, {term(4, {15}), term(2, {0, -12}), term(0, {0, 0, 1})}});
  c.push_back({"S_9_5", 9, 5, {term(4, {63}), term(2, {0, -36}), term(0, {0, 0, 2})}});
  c.push_back({"S_11_7", 11, 7, {term(4, {54}), term(2, {0, -24}), term(0, {0, 0, 1})}});
  return c;
}

Integer eval_n_poly(const std::vector<long long>& poly, std::size_t n) {
  Integer r = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    r *= static_cast<unsigned long>(n);
    r += static_cast<long>(*it);
  }
  return r;
}

}  // namespace

const MomentTable& F1Enumeration::moment(unsigned t) const {
  return moments[moment_index(t)];
}

F1Enumeration enumerate_F1(std::size_t precision) {
  F1Enumeration out;
  for (std::size_t i = 0; i < kMomentOrders.size(); ++i) {
    out.moments[i] = MomentTable{1, kMomentOrders[i], IntSequence(precision + 1)};
  }
  for (std::size_t un = 0; un <= precision; ++un) {
    const auto n = static_cast<std::int64_t>(un);
    const std::int64_t bound = isqrt(4 * n / 3);
    for (std::int64_t x1 = -bound; x1 <= bound; ++x1) {
      const std::int64_t disc = 4 * n - 3 * x1 * x1;
      const std::int64_t s = isqrt(disc);
      if (s < 0 || s * s != disc || ((s - x1) & 1) != 0) continue;
      const int roots = s == 0 ? 1 : 2;
      for (std::size_t i = 0; i < kMomentOrders.size(); ++i) {
        out.moments[i].values[un] += roots * x_pow(x1, kMomentOrders[i]);
      }
    }
  }
  out.theta = QSeries::from_sequence(out.moments[0].values);
  return out;
}

IntSequence convolve(const IntSequence& a, const IntSequence& b) {
  const std::size_t len = std::min(a.size(), b.size());
  IntSequence c(len);
  Integer term;
  for (std::size_t i = 0; i < len; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j < len; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpz_mul(term.get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
      c[i + j] += term;
    }
  }
  return c;
}

IntSequence s2k_bruteforce(unsigned k, std::size_t precision) {
  IntSequence acc(precision + 1);
  acc[0] = 1;
  if (k == 0) return acc;
  const F1Enumeration f1 = enumerate_F1(precision);
  for (unsigned i = 0; i < k; ++i) acc = convolve(acc, f1.moment(0).values);
  return acc;
}

MomentTable moment_table(unsigned k, unsigned t, std::size_t precision) {
  if (k == 0) throw std::invalid_argument("moment_table: k must be >= 1");
  const F1Enumeration f1 = enumerate_F1(precision);
  return MomentTable{k, t, convolve(f1.moment(t).values, s2k_bruteforce(k - 1, precision))};
}

const std::vector<LomadzeSumSpec>& lomadze_catalog() {
  static const std::vector<LomadzeSumSpec> catalog = build_catalog();
  return catalog;
}

const LomadzeSumSpec& lomadze_spec(std::string_view name) {
  for (const auto& spec : lomadze_catalog()) {
    if (spec.name == name) return spec;
  }
  std::string known;
  for (const auto& spec : lomadze_catalog()) known += (known.empty() ? "" : ", ") + spec.name;
  throw UnknownSum("'" + std::string(name) + "' (known: " + known + ")");
}

LatticeTables::LatticeTables(std::size_t precision)
    : precision_(precision), f1_(enumerate_F1(precision)) {}

const IntSequence& LatticeTables::representation_numbers(unsigned k) const {
  std::lock_guard lock(mu_);
  // Build upwards from the largest cached k below the request.
  unsigned have = 0;
  if (auto it = reps_.find(k); it != reps_.end()) return *it->second;
  for (const auto& [kk, seq] : reps_) {
    if (kk < k) have = std::max(have, kk);
  }
  IntSequence acc;
  if (have == 0) {
    acc.assign(precision_ + 1, Integer(0));
    acc[0] = 1;
  } else {
    acc = *reps_.at(have);
  }
  for (unsigned kk = have + 1; kk <= k; ++kk) {
    acc = convolve(acc, f1_.moment(0).values);
    reps_.emplace(kk, std::make_unique<IntSequence>(acc));
  }
  if (k == 0) reps_.emplace(0, std::make_unique<IntSequence>(acc));
  return *reps_.at(k);
}

const MomentTable& LatticeTables::moments(unsigned k, unsigned t) const {
  if (k == 0) throw std::invalid_argument("moments: k must be >= 1");
  const MomentTable& base = f1_.moment(t);
  if (k == 1) return base;
  {
    std::lock_guard lock(mu_);
    if (auto it = moments_.find({k, t}); it != moments_.end()) return *it->second;
  }
  const IntSequence& rest = representation_numbers(k - 1);
  auto table = std::make_unique<MomentTable>(MomentTable{k, t, convolve(base.values, rest)});
  std::lock_guard lock(mu_);
  auto [it, inserted] = moments_.emplace(std::make_pair(k, t), std::move(table));
  return *it->second;
}

Integer lomadze_sum(const LomadzeSumSpec& spec, const LatticeTables& tables, std::size_t n) {
  if (n > tables.precision()) {
    throw OutOfPrecision(spec.name + "(" + std::to_string(n) + ") needs tables of precision >= " +
                         std::to_string(n) + ", have " + std::to_string(tables.precision()));
  }
  Integer total = 0;
  for (const auto& t : spec.terms) {
    const Integer& m = tables.moments(spec.blocks, t.x1_power).values[n];
    if (sgn(m) == 0) continue;
    total += eval_n_poly(t.n_poly, n) * m;
  }
  return total;
}

}  // namespace qtheta
