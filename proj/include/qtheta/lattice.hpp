#pragma once
// Representation numbers of F_k = sum_{j=1..k} (x_{2j-1}^2 + x_{2j-1}x_{2j} + x_{2j}^2),
// first-coordinate moments over the solution sets of F_k(x) = n, and the
// finite polynomial sums built from those moments.
//
// F_k is the orthogonal sum of k copies of F_1, so every quantity here comes
// from one enumeration of F_1 followed by convolutions:
//   s_{2k}      = s_2 * s_{2(k-1)}
//   M_t^{(k)}   = M_t^{(1)} * s_{2(k-1)}
// where * is the Cauchy product of coefficient sequences.

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtheta/rational.hpp"
#include "qtheta/series.hpp"

namespace qtheta {

using IntSequence = std::vector<Integer>;

inline constexpr std::array<unsigned, 5> kMomentOrders{0, 2, 4, 6, 8};

/// n -> sum_{F_k(x) = n} x_1^t for 0 <= n <= precision.
struct MomentTable {
  unsigned blocks = 0;
  unsigned order = 0;
  IntSequence values;

  std::size_t precision() const { return values.size() - 1; }
};

struct F1Enumeration {
  QSeries theta;                         // sum_n s_2(n) q^n
  std::array<MomentTable, 5> moments;    // indexed like kMomentOrders

  const MomentTable& moment(unsigned t) const;
};

/// Enumerates x1^2 + x1 x2 + x2^2 = n for n <= precision: |x1| <= isqrt(4n/3),
/// and for each x1 the roots x2 = (-x1 +- sqrt(4n - 3 x1^2)) / 2 are taken when
/// the discriminant is a perfect square of the right parity.
F1Enumeration enumerate_F1(std::size_t precision);

/// Cauchy product of two sequences, truncated to the shorter one.
IntSequence convolve(const IntSequence& a, const IntSequence& b);

/// s_{2k}(0..precision); k = 0 gives the sequence 1, 0, 0, ...
IntSequence s2k_bruteforce(unsigned k, std::size_t precision);

/// M_t^{(k)} for t in {0,2,4,6,8}, k >= 1.
MomentTable moment_table(unsigned k, unsigned t, std::size_t precision);

/// One term c(n) * x_1^t of a polynomial sum; c(n) = sum_i n_poly[i] * n^i.
struct PolyTerm {
  std::vector<long long> n_poly;
  unsigned x1_power = 0;
};

/// sum over F_blocks(x) = n of sum_terms c(n) x_1^t. `weight` is the weight
/// tag carried in the name, e.g. L_{12;8} has weight 12 and 8 blocks.
struct LomadzeSumSpec {
  std::string name;
  unsigned weight = 0;
  unsigned blocks = 0;
  std::vector<PolyTerm> terms;
};

/// All 13 polynomial sums used by the identities.
const std::vector<LomadzeSumSpec>& lomadze_catalog();

/// Catalog lookup by name ("L_12_8", "Lcal_4", ...); throws UnknownSum.
const LomadzeSumSpec& lomadze_spec(std::string_view name);

/// Memoized representation numbers and moment tables at a fixed precision.
/// Tables are built on first use under a lock and never modified afterwards,
/// so references stay valid for the lifetime of the object.
class LatticeTables {
 public:
  explicit LatticeTables(std::size_t precision);

  std::size_t precision() const { return precision_; }
  const F1Enumeration& f1() const { return f1_; }

  /// s_{2k}(0..precision), k >= 0.
  const IntSequence& representation_numbers(unsigned k) const;
  const MomentTable& moments(unsigned k, unsigned t) const;

 private:
  std::size_t precision_;
  F1Enumeration f1_;
  mutable std::mutex mu_;
  mutable std::map<unsigned, std::unique_ptr<IntSequence>> reps_;
  mutable std::map<std::pair<unsigned, unsigned>, std::unique_ptr<MomentTable>> moments_;
};

/// sum_t c_t(n) M_t^{(blocks)}(n). Throws OutOfPrecision if n > tables.precision().
Integer lomadze_sum(const LomadzeSumSpec& spec, const LatticeTables& tables, std::size_t n);

}  // namespace qtheta
