#include "qtheta/report.hpp"

#include <iomanip>

namespace qtheta {

using nlohmann::json;

namespace {

json entry_json(const ReportEntry& e) {
  return json{{"n", e.n}, {"lhs", to_string(e.lhs)}, {"rhs", to_string(e.rhs)}};
}

ReportEntry entry_from_json(const json& j) {
  ReportEntry e{j.at("n").get<std::size_t>(), parse_rational(j.at("lhs").get<std::string>()),
                parse_rational(j.at("rhs").get<std::string>()), false};
  e.match = e.lhs == e.rhs;
  return e;
}

}  // namespace

// Only mismatching entries are serialized; matching n are implied by the
// range [1, n_max], and their common value is not needed to audit a run.
json to_json(const IdentityReport& r) {
  json mismatches = json::array();
  for (const auto& e : r.entries) {
    if (!e.match) mismatches.push_back(entry_json(e));
  }
  json j{{"name", r.name},
         {"n_max", r.n_max},
         {"status", r.status()},
         {"documented", r.documented},
         {"convention", r.convention},
         {"mismatches", std::move(mismatches)}};
  if (r.constant_term) {
    json c = entry_json(*r.constant_term);
    c["match"] = r.constant_term->match;
    j["constant_term"] = std::move(c);
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

IdentityReport report_from_json(const json& j) {
  IdentityReport r;
  r.name = j.at("name").get<std::string>();
  r.n_max = j.at("n_max").get<std::size_t>();
  r.documented = j.value("documented", false);
  r.convention = j.value("convention", std::string("N"));
  r.note = j.value("note", std::string());
  std::vector<ReportEntry> bad;
  for (const auto& m : j.at("mismatches")) bad.push_back(entry_from_json(m));
  // Matching entries carry no values on the wire; they are restored as 0 = 0.
  std::size_t next = 0;
  for (std::size_t n = 1; n <= r.n_max; ++n) {
    if (next < bad.size() && bad[next].n == n) {
      r.entries.push_back(bad[next++]);
    } else {
      r.entries.push_back(ReportEntry{n, 0, 0, true});
    }
  }
  if (j.contains("constant_term")) r.constant_term = entry_from_json(j.at("constant_term"));
  return r;
}

json to_json(const std::vector<IdentityReport>& reports) {
  json a = json::array();
  for (const auto& r : reports) a.push_back(to_json(r));
  return a;
}

std::vector<IdentityReport> reports_from_json(const json& j) {
  std::vector<IdentityReport> out;
  for (const auto& r : j) out.push_back(report_from_json(r));
  return out;
}

json to_json(const std::vector<RhoDiscrepancyRow>& rows) {
  json a = json::array();
  for (const auto& r : rows) {
    a.push_back(json{{"ell", r.ell},
                     {"n", r.n},
                     {"rho_printed", to_string(r.rho_printed)},
                     {"rho_decomposition", to_string(r.rho_decomposition)},
                     {"theorem_value", to_string(r.theorem_value)},
                     {"bruteforce", to_string(r.bruteforce)},
                     {"difference", to_string(r.difference)}});
  }
  return a;
}

void write_csv(std::ostream& os, const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports) {
    os << "# " << r.name << ' ' << r.status() << '\n';
    os << "n,lhs,rhs,match\n";
    if (r.constant_term) {
      const auto& c = *r.constant_term;
      os << 0 << ',' << to_string(c.lhs) << ',' << to_string(c.rhs) << ','
         << (c.match ? "true" : "false") << '\n';
    }
    for (const auto& e : r.entries) {
      os << e.n << ',' << to_string(e.lhs) << ',' << to_string(e.rhs) << ','
         << (e.match ? "true" : "false") << '\n';
    }
  }
}

void write_table(std::ostream& os, const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports) {
    os << std::left << std::setw(20) << r.name << ' ' << std::setw(24) << r.status()
       << " n=1.." << r.n_max;
    if (const auto first = r.first_mismatch()) os << "  first mismatch at n=" << *first;
    if (r.constant_term) os << "  q^0 " << (r.constant_term->match ? "ok" : "differs");
    os << '\n';
    if (!r.note.empty()) os << "    " << r.note << '\n';
  }
}

void write_csv(std::ostream& os, const std::vector<RhoDiscrepancyRow>& rows) {
  os << "ell,n,rho_printed,rho_decomposition,theorem_value,bruteforce,difference\n";
  for (const auto& r : rows) {
    os << r.ell << ',' << r.n << ',' << to_string(r.rho_printed) << ','
       << to_string(r.rho_decomposition) << ',' << to_string(r.theorem_value) << ','
       << to_string(r.bruteforce) << ',' << to_string(r.difference) << '\n';
  }
}

}  // namespace qtheta
