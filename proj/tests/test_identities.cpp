#include <doctest.h>

#include <algorithm>

#include "qtheta/error.hpp"
#include "qtheta/identities.hpp"

using qtheta::IdentityContext;
using qtheta::Rational;

namespace {

const IdentityContext& ctx() {
  static const IdentityContext c(120);
  return c;
}

const qtheta::IdentityReport& find(const std::vector<qtheta::IdentityReport>& rs, const std::string& name) {
  auto it = std::find_if(rs.begin(), rs.end(), [&](const auto& r) { return r.name == name; });
  REQUIRE(it != rs.end());
  return *it;
}

}  // namespace

TEST_CASE("frac canonicalizes") {
  CHECK(qtheta::frac(6, 4) == Rational(3, 2));
  CHECK(qtheta::to_string(qtheta::frac(-6, 4)) == "-3/2");
  CHECK(qtheta::to_string(qtheta::frac(4, 2)) == "2");
}

TEST_CASE("convolution conventions") {
  qtheta::ConvolutionConvention pos, nonneg;
  nonneg.range = qtheta::ConvolutionConvention::Range::nonnegative;
  CHECK(qtheta::ConvolutionConvention::sigma_at_zero(1) == Rational(-1, 24));
  CHECK(qtheta::ConvolutionConvention::sigma_at_zero(3) == Rational(1, 240));
  auto one = [](std::size_t) -> Rational { return 1; };
  CHECK(qtheta::convolution_sum(5, pos, one, one) == 4);
  CHECK(qtheta::convolution_sum(5, nonneg, one, one) == 6);
}

TEST_CASE("tau via the lattice-sum formula, spot values") {
  CHECK(qtheta::tau_via_paper_formula(ctx(), 1) == 1);
  CHECK(qtheta::tau_via_paper_formula(ctx(), 2) == -24);
  CHECK(qtheta::tau_via_paper_formula(ctx(), 3) == 252);
  CHECK(qtheta::tau_via_paper_formula(ctx(), 4) == -1472);
  CHECK(qtheta::tau_via_paper_formula(ctx(), 5) == 4830);
}

TEST_CASE("odd-weight formulas: corrected rho* agrees with brute force") {
  for (unsigned k : {7u, 9u, 11u})
    for (std::size_t n = 1; n <= 40; ++n)
      CHECK(qtheta::odd_weight_formula(ctx(), k, n, qtheta::RhoVariant::decomposition) ==
            Rational(ctx().representation_number(k, n)));
  CHECK(Rational(ctx().representation_number(7, 1)) == 42);
}

TEST_CASE("odd-weight formulas: printed rho* is off") {
  CHECK(qtheta::s14_formula(ctx(), 1, qtheta::RhoVariant::printed) != 42);
}

TEST_CASE("decompositions reproduce theta series including q^0") {
  for (unsigned k : {7u, 9u, 11u, 12u, 14u}) {
    const auto d = qtheta::decomposition(ctx(), k);
    CHECK(d[0] == 1);
    for (std::size_t n = 1; n <= 120; ++n) CHECK(d[n] == Rational(ctx().representation_number(k, n)));
  }
  CHECK_THROWS_AS(qtheta::decomposition(ctx(), 8), qtheta::UnsupportedK);
}

TEST_CASE("E2(3z)Delta convolution lhs against an independent series oracle") {
  // E2(3z) Delta = Delta - 24 sum_{3a+b=n} sigma(a) tau(b) q^n
  const auto& delta = ctx().form("Delta");
  const auto e2_3 = qtheta::scale_argument(qtheta::eisenstein_classical(2, 120), 3);
  const auto prod = e2_3 * delta;
  for (std::size_t n = 1; n <= 120; ++n) {
    Rational lhs = 0;
    for (std::size_t a = 1; 3 * a < n; ++a) lhs += Rational(qtheta::sigma(1, a)) * delta[n - 3 * a];
    CHECK(lhs == (delta[n] - prod[n]) / 24);
  }
}

TEST_CASE("verify_all: shape and status") {
  const auto reports = qtheta::verify_all(ctx(), 60);
  CHECK(reports.size() == qtheta::identity_names().size());
  for (const auto& r : reports) {
    CAPTURE(r.name);
    CHECK(r.entries.size() == 60);
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
      CHECK(r.entries[i].n == i + 1);
      CHECK(r.entries[i].match == (r.entries[i].lhs == r.entries[i].rhs));
    }
    if (r.documented) {
      CHECK(r.status() == "documented-discrepancy");
    } else {
      CHECK(r.status() == "match");
    }
  }
  CHECK(qtheta::reports_pass(reports, false));
  CHECK_FALSE(qtheta::reports_pass(reports, true));
  CHECK(find(reports, "s28-cor-as-printed").first_mismatch() == 1);
  CHECK(find(reports, "s28-cor").all_match());
  CHECK(find(reports, "tau2").convention == "N");
  CHECK(find(reports, "F7-decomposition").constant_term.has_value());
}

TEST_CASE("verify_all: errors and empty range") {
  CHECK_THROWS_AS(qtheta::verify_all(ctx(), 10, {"no-such"}), qtheta::UnknownIdentity);
  CHECK_THROWS_AS(qtheta::verify_all(ctx(), 121), qtheta::PrecisionTooLow);
  const auto r = qtheta::verify_all(ctx(), 0, {"tau1"});
  REQUIRE(r.size() == 1);
  CHECK(r[0].entries.empty());
  CHECK(r[0].all_match());
}

TEST_CASE("rho* discrepancy table") {
  const auto rows = qtheta::rho_star_discrepancy_table(ctx(), 20);
  CHECK(rows.size() == 60);
  for (const auto& row : rows) {
    CHECK(Rational(row.bruteforce) == Rational(ctx().representation_number(row.ell + 1, row.n)));
    CHECK(row.difference == row.theorem_value - Rational(row.bruteforce));
  }
}
