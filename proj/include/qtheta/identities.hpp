#pragma once
// Closed-form formulas for s_{2k}(n), k in {7, 9, 11, 12, 14}, the tau(n)
// formula in terms of lattice sums, and the convolution identities that feed
// it, each checked exactly against brute-force representation numbers or an
// independent series expansion.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtheta/forms.hpp"
#include "qtheta/lattice.hpp"
#include "qtheta/rational.hpp"
#include "qtheta/series.hpp"

namespace qtheta {

/// Canonicalized p/q.
Rational frac(long p, long q = 1);

/// Summation ranges and boundary values for sums over a + b = n.
/// Over N both indices start at 1; over N_0 the a = 0 and b = 0 terms are
/// included with sigma_r(0) and the cusp-form values at 0 taken from here.
struct ConvolutionConvention {
  enum class Range { positive, nonnegative };
  Range range = Range::positive;

  /// sigma_1(0) = -1/24, sigma_3(0) = 1/240, sigma_5(0) = -1/504, sigma_7(0) = 1/480.
  static Rational sigma_at_zero(unsigned r);
  /// tau_{6,3}(0) = tau_{8,3}(0) = tau_{10,3;2}(0) = tau(0) = 0.
  static Rational cusp_at_zero() { return 0; }

  std::size_t lower() const { return range == Range::positive ? 1 : 0; }
  std::string_view label() const { return range == Range::positive ? "N" : "N0"; }
};

struct ReportEntry {
  std::size_t n = 0;
  Rational lhs;
  Rational rhs;
  bool match = false;

  bool operator==(const ReportEntry&) const = default;
};

/// Per-n verdicts for one identity over [1, n_max].
struct IdentityReport {
  std::string name;
  std::size_t n_max = 0;
  std::vector<ReportEntry> entries;  // n = 1 .. n_max, in order
  /// q^0 comparison, for series decompositions only.
  std::optional<ReportEntry> constant_term;
  /// Known disagreement of a printed closed form; does not fail a
  /// non-strict run.
  bool documented = false;
  std::string convention = "N";
  std::string note;

  bool all_match() const;
  std::optional<std::size_t> first_mismatch() const;
  /// "match", "documented-discrepancy" or "mismatch".
  std::string status() const;
};

/// One row of the rho*-vs-decomposition table for l in {6, 8, 10}.
struct RhoDiscrepancyRow {
  unsigned ell = 0;
  std::size_t n = 0;
  Integer rho_printed;        // closed form as printed
  Integer rho_decomposition;  // value implied by the basis decomposition
  Rational theorem_value;     // s_{2k}(n) from the printed closed form
  Integer bruteforce;         // s_{2k}(n)
  Rational difference;        // theorem_value - bruteforce
};

enum class RhoVariant { printed, decomposition };

/// Immutable-after-build cache of every series and table the identities use,
/// at a fixed precision. Entries are built once on first access.
class IdentityContext {
 public:
  explicit IdentityContext(std::size_t precision = kDefaultPrecision);

  std::size_t precision() const { return precision_; }
  const LatticeTables& lattice() const { return lattice_; }

  /// Catalog form series (see named_form).
  const QSeries& form(std::string_view name) const;
  /// Twisted Eisenstein series E_{k,chi,psi}, chi_is_trivial selects (1, chi_-3)
  /// versus (chi_-3, 1).
  const QSeries& eisenstein_twisted(unsigned k, bool chi_is_trivial) const;

  /// s_{2k}(n) by enumeration + convolution.
  const Integer& representation_number(unsigned k, std::size_t n) const;
  /// sigma_r(n) for 1 <= n <= precision; sigma_r(0) = 0 here.
  const Integer& sigma_value(unsigned r, std::size_t n) const;
  /// Named lattice sum at n.
  const Integer& lattice_sum(std::string_view name, std::size_t n) const;

  // Frequently used coefficients.
  Rational tau(std::size_t n) const { return form("Delta").coefficient(n); }
  Rational tau_6_3(std::size_t n) const { return form("Delta_6_3").coefficient(n); }
  Rational tau_8_3(std::size_t n) const { return form("Delta_8_3").coefficient(n); }
  /// tau_{10,3;2}(n) := L_{10;6}(n) / 120.
  Rational tau_10_3(std::size_t n) const;

 private:
  const IntSequence& sigma_table(unsigned r) const;
  const IntSequence& lattice_sum_table(std::string_view name) const;

  std::size_t precision_;
  LatticeTables lattice_;
  mutable std::recursive_mutex mu_;
  mutable std::map<std::string, std::unique_ptr<QSeries>, std::less<>> series_;
  mutable std::map<std::string, std::unique_ptr<IntSequence>, std::less<>> tables_;
};

/// Sum over a + b = n (a, b in the convention's range) of f(a) g(b).
template <typename F, typename G>
Rational convolution_sum(std::size_t n, const ConvolutionConvention& conv, F&& f, G&& g) {
  Rational s = 0;
  const std::size_t lo = conv.lower();
  for (std::size_t a = lo; a + lo <= n; ++a) s += Rational(f(a)) * Rational(g(n - a));
  return s;
}

// --- s_{2k}(n) for k = 7, 9, 11 -----------------------------------------

/// (3/7) rho_6(n) + (216/7) tau_{7,3,chi}(n).
Rational s14_formula(const IdentityContext& ctx, std::size_t n, RhoVariant v = RhoVariant::printed);
/// (27/809) rho_8(n) + (24*1728/809) (27 tau_{9;1}(n) + tau_{9;2}(n)).
Rational s18_formula(const IdentityContext& ctx, std::size_t n, RhoVariant v = RhoVariant::printed);
/// (3/1847) rho_10(n) + (81*748/9235) (tau_{11;1}(n) + 9 tau_{11;2}(n)).
Rational s22_formula(const IdentityContext& ctx, std::size_t n, RhoVariant v = RhoVariant::printed);
/// Dispatch on k in {7, 9, 11}.
Rational odd_weight_formula(const IdentityContext& ctx, unsigned k, std::size_t n, RhoVariant v);

// --- basis decompositions of F_k -----------------------------------------

/// F_k as a linear combination of Eisenstein series and cusp forms, for
/// k in {7, 9, 11, 12, 14}; throws UnsupportedK otherwise.
QSeries decomposition(const IdentityContext& ctx, unsigned k);
inline QSeries decomposition_F7(const IdentityContext& c) { return decomposition(c, 7); }
inline QSeries decomposition_F9(const IdentityContext& c) { return decomposition(c, 9); }
inline QSeries decomposition_F11(const IdentityContext& c) { return decomposition(c, 11); }
inline QSeries decomposition_F12(const IdentityContext& c) { return decomposition(c, 12); }
inline QSeries decomposition_F14(const IdentityContext& c) { return decomposition(c, 14); }

// --- s_24, s_28 ------------------------------------------------------------

Rational s24_formula(const IdentityContext& ctx, std::size_t n);
Rational s28_formula(const IdentityContext& ctx, std::size_t n);
/// s_24 via sigma*_11 and L_{12;8}, L_{12;6}, L_{12;4}.
Rational lomadze_s24(const IdentityContext& ctx, std::size_t n);
/// s_28 via sigma*_13 and L_{14;10}, L_{14;8}, L_{14;6}.
Rational lomadze_s28(const IdentityContext& ctx, std::size_t n);

// --- tau -------------------------------------------------------------------

/// tau(n) from L_{12;8}, L_{12;6}, Lcal_4, L_{6;2} and two convolutions of
/// divisor sums with L_{8;4}, L_{6;2}.
Rational tau_via_paper_formula(const IdentityContext& ctx, std::size_t n);

// --- reports ---------------------------------------------------------------

/// tau-2, tau-3, newform-7, newform-9, newform-11, tau-10-3.
std::vector<IdentityReport> newform_coeff_identities(const IdentityContext& ctx, std::size_t n_max);
/// sum_{a+b=n} sigma(a) tau(b) = (1 - n) tau(n) / 24.
IdentityReport ramanujan_convolution(const IdentityContext& ctx, std::size_t n_max);
/// The 7-term expression for sum_{3a+b=n} sigma(a) tau(b). Evaluated over N;
/// if any n fails, the N_0 reading is tried and recorded in the report.
IdentityReport e2_delta_convolution(const IdentityContext& ctx, std::size_t n_max);
/// The three-convolution relation between L-sums, with the L_{6;2} term on
/// the right-hand side carrying coefficient -461/3.
IdentityReport s28_convolution_identity(const IdentityContext& ctx, std::size_t n_max);
/// Same relation with +461/3 L_{6;2}, as it is commonly printed.
IdentityReport s28_convolution_identity_as_printed(const IdentityContext& ctx, std::size_t n_max);

/// rho*_l versus the decomposition for l in {6, 8, 10}, n = 1..n_max.
std::vector<RhoDiscrepancyRow> rho_star_discrepancy_table(const IdentityContext& ctx,
                                                          std::size_t n_max);

/// Every identity name accepted by verify_all, in run order.
const std::vector<std::string>& identity_names();

/// Runs the selected identities (all when selection is empty) over [1, n_max].
/// Throws PrecisionTooLow if n_max exceeds ctx.precision() and UnknownIdentity
/// for names outside identity_names() (checked before any computation).
std::vector<IdentityReport> verify_all(const IdentityContext& ctx, std::size_t n_max,
                                       const std::vector<std::string>& selection = {});

/// True iff every report matches, or is a documented discrepancy and !strict.
bool reports_pass(const std::vector<IdentityReport>& reports, bool strict);

}  // namespace qtheta
