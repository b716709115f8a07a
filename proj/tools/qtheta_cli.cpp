// qtheta: representation numbers of x1^2 + x1x2 + x2^2 + ... + x_{2k-1}^2 + x_{2k-1}x_{2k} + x_{2k}^2,
// the tau(n) lattice-sum formula, and exact verification of the related identities.
//
//   qtheta s2k --k 7 --n 1 --method bruteforce
//   qtheta tau --n 1..3 --method eta
//   qtheta lsum L_6_2 --n 1
//   qtheta verify --all --nmax 50 --format json
//   qtheta discrepancy --nmax 50 --format csv

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "qtheta/error.hpp"
#include "qtheta/forms.hpp"
#include "qtheta/identities.hpp"
#include "qtheta/lattice.hpp"
#include "qtheta/report.hpp"

namespace {

using qtheta::Rational;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitError = 2;

struct CliConfig {
  std::size_t precision = qtheta::kDefaultPrecision;
  std::string format = "table";
  std::string n_spec;
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& spec) {
  auto to_n = [&](const std::string& s) {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad n: '" + spec + "'");
    return static_cast<std::size_t>(v);
  };
  if (const auto dots = spec.find(".."); dots != std::string::npos) {
    const std::size_t lo = to_n(spec.substr(0, dots));
    const std::size_t hi = to_n(spec.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range '" + spec + "'");
    return {lo, hi};
  }
  const std::size_t n = to_n(spec);
  return {n, n};
}

void require_precision(const CliConfig& cfg, std::size_t n_max) {
  if (n_max > cfg.precision) {
    throw qtheta::PrecisionTooLow("n = " + std::to_string(n_max) + " exceeds --precision " +
                                  std::to_string(cfg.precision));
  }
}

template <typename F>
void print_values(const CliConfig& cfg, std::size_t lo, std::size_t hi, F&& value) {
  if (cfg.format == "json") {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t n = lo; n <= hi; ++n) {
      a.push_back({{"n", n}, {"value", qtheta::to_string(value(n))}});
    }
    std::cout << a.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "n,value\n";
    for (std::size_t n = lo; n <= hi; ++n) std::cout << n << ',' << qtheta::to_string(value(n)) << '\n';
  } else if (lo == hi) {
    std::cout << qtheta::to_string(value(lo)) << '\n';
  } else {
    for (std::size_t n = lo; n <= hi; ++n) std::cout << n << ' ' << qtheta::to_string(value(n)) << '\n';
  }
}

int run_s2k(const CliConfig& cfg, unsigned k, const std::string& method) {
  const auto [lo, hi] = parse_range(cfg.n_spec);
  require_precision(cfg, hi);
  const qtheta::IdentityContext ctx(cfg.precision);
  if (method == "bruteforce") {
    if (k < 1 || k > 14) throw qtheta::UnsupportedK("bruteforce supports k in 1..14");
    print_values(cfg, lo, hi, [&](std::size_t n) { return Rational(ctx.representation_number(k, n)); });
    return 0;
  }
  if (k != 7 && k != 9 && k != 11 && k != 12 && k != 14) {
    throw qtheta::UnsupportedK(method + " supports k in {7, 9, 11, 12, 14}");
  }
  if (method == "decomposition") {
    const qtheta::QSeries dec = qtheta::decomposition(ctx, k);
    print_values(cfg, lo, hi, [&](std::size_t n) { return dec.coefficient(n); });
    return 0;
  }
  if (lo == 0) throw std::invalid_argument("formula is stated for n >= 1");
  print_values(cfg, lo, hi, [&](std::size_t n) -> Rational {
    if (k == 12) return qtheta::s24_formula(ctx, n);
    if (k == 14) return qtheta::s28_formula(ctx, n);
    return qtheta::odd_weight_formula(ctx, k, n, qtheta::RhoVariant::decomposition);
  });
  return 0;
}

int run_tau(const CliConfig& cfg, const std::string& method) {
  const auto [lo, hi] = parse_range(cfg.n_spec);
  if (lo == 0) throw std::invalid_argument("tau is defined for n >= 1");
  require_precision(cfg, hi);
  const qtheta::IdentityContext ctx(cfg.precision);
  if (method == "eta") {
    print_values(cfg, lo, hi, [&](std::size_t n) { return ctx.tau(n); });
  } else {
    print_values(cfg, lo, hi, [&](std::size_t n) { return qtheta::tau_via_paper_formula(ctx, n); });
  }
  return 0;
}

int run_lsum(const CliConfig& cfg, const std::string& name) {
  const qtheta::LomadzeSumSpec& spec = qtheta::lomadze_spec(name);
  const auto [lo, hi] = parse_range(cfg.n_spec);
  require_precision(cfg, hi);
  const qtheta::LatticeTables tables(cfg.precision);
  print_values(cfg, lo, hi,
               [&](std::size_t n) { return Rational(qtheta::lomadze_sum(spec, tables, n)); });
  return 0;
}

int run_verify(const CliConfig& cfg, const std::vector<std::string>& identities, bool all,
               std::size_t n_max, bool strict) {
  if (!all && identities.empty()) throw std::invalid_argument("pass --all or --identity NAME");
  const std::vector<std::string> selection = all ? std::vector<std::string>{} : identities;
  const qtheta::IdentityContext ctx(cfg.precision);
  const auto reports = qtheta::verify_all(ctx, n_max, selection);
  if (cfg.format == "json") {
    std::cout << qtheta::to_json(reports).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    qtheta::write_csv(std::cout, reports);
  } else {
    qtheta::write_table(std::cout, reports);
  }
  return qtheta::reports_pass(reports, strict) ? 0 : kExitVerifyFailed;
}

int run_discrepancy(const CliConfig& cfg, std::size_t n_max) {
  const qtheta::IdentityContext ctx(cfg.precision);
  const auto rows = qtheta::rho_star_discrepancy_table(ctx, n_max);
  if (cfg.format == "json") {
    std::cout << qtheta::to_json(rows).dump(2) << '\n';
  } else {
    qtheta::write_csv(std::cout, rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representation numbers, tau(n) lattice-sum formula and identity verification"};
  app.require_subcommand(1);

  CliConfig cfg;
  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--precision", cfg.precision, "working precision N (coefficients q^0..q^N)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
  };

  unsigned k = 0;
  std::string s2k_method = "bruteforce";
  auto* s2k = app.add_subcommand("s2k", "representation numbers s_{2k}(n)");
  s2k->add_option("--k", k, "number of binary blocks")->required();
  s2k->add_option("--n", cfg.n_spec, "n or a..b")->required();
  s2k->add_option("--method", s2k_method)
      ->check(CLI::IsMember({"formula", "bruteforce", "decomposition"}));
  add_common(s2k);

  std::string tau_method = "eta";
  auto* tau = app.add_subcommand("tau", "Ramanujan tau(n)");
  tau->add_option("--n", cfg.n_spec, "n or a..b")->required();
  tau->add_option("--method", tau_method)->check(CLI::IsMember({"eta", "paper-formula"}));
  add_common(tau);

  std::string sum_name;
  auto* lsum = app.add_subcommand("lsum", "lattice polynomial sums (L_12_8, Lcal_4, S_7_3, ...)");
  lsum->add_option("name", sum_name)->required();
  lsum->add_option("--n", cfg.n_spec, "n or a..b")->required();
  add_common(lsum);

  std::vector<std::string> identities;
  bool all = false;
  bool strict = false;
  std::size_t n_max = 50;
  auto* verify = app.add_subcommand("verify", "verify identities exactly over n = 1..nmax");
  verify->add_option("--identity", identities, "identity name (repeatable)");
  verify->add_flag("--all", all, "run every identity");
  verify->add_option("--nmax", n_max, "largest n checked");
  verify->add_flag("--strict", strict, "fail on documented discrepancies too");
  add_common(verify);

  std::size_t disc_n_max = 50;
  auto* disc = app.add_subcommand("discrepancy", "rho*_l closed form vs basis decomposition, l = 6, 8, 10");
  disc->add_option("--nmax", disc_n_max, "largest n");
  add_common(disc);

  auto* list = app.add_subcommand("list", "list identity, lattice-sum and form names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*s2k) return run_s2k(cfg, k, s2k_method);
    if (*tau) return run_tau(cfg, tau_method);
    if (*lsum) return run_lsum(cfg, sum_name);
    if (*verify) return run_verify(cfg, identities, all, n_max, strict);
    if (*disc) return run_discrepancy(cfg, disc_n_max);
    if (*list) {
      std::cout << "identities:";
      for (const auto& n : qtheta::identity_names()) std::cout << ' ' << n;
      std::cout << "\nlattice sums:";
      for (const auto& s : qtheta::lomadze_catalog()) std::cout << ' ' << s.name;
      std::cout << "\nforms:";
      for (const auto& f : qtheta::form_catalog()) std::cout << ' ' << f;
      std::cout << '\n';
      return 0;
    }
  } catch (const qtheta::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
