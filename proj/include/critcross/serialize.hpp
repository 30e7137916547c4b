#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include <json.hpp>

#include "critcross/census.hpp"
#include "critcross/check_report.hpp"
#include "critcross/oracle.hpp"
#include "critcross/pairs.hpp"
#include "critcross/solver.hpp"

namespace critcross {

// Big integers and rationals are emitted as strings so no value is rounded.

nlohmann::json to_json(const DegreeCensus3456& census);
nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const GammaParams& params);
nlohmann::json to_json(const DerivationReport& report);
nlohmann::json to_json(const PairCounts& counts);
/// Witness pairs are listed by edge id and as dense vertex quadruples (u1, v1, u2, v2).
nlohmann::json to_json(const Multigraph& g, const CrossingCertificate& certificate);
nlohmann::json to_json(const Multigraph& g, const OracleResult& result);
CrossingCertificate certificate_from_json(const nlohmann::json& j);

const char* status_name(OracleResult::Status status);
const char* verdict_name(CriticalityReport::Verdict verdict);

/// "x,f(x)" header, then one row per sample with `digits` fractional digits.
void write_bound_csv(const std::vector<std::pair<Rational, Rational>>& samples, int digits, std::ostream& os);

}  // namespace critcross
