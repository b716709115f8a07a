#pragma once
// Serialization of identity reports and the rho* discrepancy table.
// Rationals are written as "p/q" strings (bare "p" when integral).

#include <ostream>
#include <vector>

#include <json.hpp>

#include "qtheta/identities.hpp"

namespace qtheta {

nlohmann::json to_json(const IdentityReport& r);
IdentityReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const std::vector<IdentityReport>& reports);
std::vector<IdentityReport> reports_from_json(const nlohmann::json& j);

nlohmann::json to_json(const std::vector<RhoDiscrepancyRow>& rows);

/// Per report: a "# name status" line, then "n,lhs,rhs,match" rows.
void write_csv(std::ostream& os, const std::vector<IdentityReport>& reports);
void write_table(std::ostream& os, const std::vector<IdentityReport>& reports);

void write_csv(std::ostream& os, const std::vector<RhoDiscrepancyRow>& rows);

}  // namespace qtheta
