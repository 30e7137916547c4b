#include "critcross/serialize.hpp"

#include <ostream>

namespace critcross {

using nlohmann::json;

json to_json(const DegreeCensus3456& c) {
  json j{{"n3", to_string(c.n3)}, {"n4", to_string(c.n4)}, {"n5", to_string(c.n5)},
         {"n6", to_string(c.n6)}, {"vertices", to_string(c.total())},
         {"edges", to_string(c.degree_sum() / 2)}};
  if (c.total() > 0) j["average_degree"] = average_degree(c).str();
  return j;
}

json to_json(const CheckReport& report) {
  json arr = json::array();
  for (const Clause& c : report.clauses) {
    arr.push_back({{"clause", c.clause}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  }
  return arr;
}

json to_json(const GammaParams& p) {
  return {{"n", to_string(p.n)}, {"m", to_string(p.m)}, {"c", to_string(p.c)}, {"w", to_string(p.w)},
          {"s", to_string(p.s)}, {"p", to_string(p.p)}, {"q", to_string(p.q)}};
}

json to_json(const DerivationReport& r) {
  const DivisionChain& c = r.chain;
  json j;
  j["inputs"] = {{"a", to_string(r.a)}, {"b", to_string(r.b)}, {"k", to_string(r.k)}, {"t", to_string(r.t)}};
  j["intermediates"] = {{"bp", to_string(c.bp)},   {"br", to_string(c.br)},   {"bpp", to_string(c.bpp)},
                        {"bpr", to_string(c.bpr)}, {"bb", to_string(c.bb)},   {"bbr", to_string(c.bbr)},
                        {"N", to_string(r.N)},     {"dividend", to_string(r.dividend)},
                        {"kp", to_string(r.kp)},   {"kr", to_string(r.kr)}};
  j["outputs"] = to_json(r.params);
  if (r.census.total() > 0) {
    j["outputs"]["crn_gamma"] = to_string(r.crn);
    j["outputs"]["census_gamma"] = to_json(r.census);
  }
  j["checks"] = to_json(r.checks);
  j["all_pass"] = r.all_pass();
  return j;
}

json to_json(const PairCounts& counts) {
  json rows = json::array();
  for (const PairCountRow& row : counts.rows) {
    rows.push_back({{"letter", std::string(1, letter_char(row.letter))},
                    {"closed_form", to_string(row.closed_form)},
                    {"enumerated", row.enumerated}});
  }
  return {{"w", counts.w},
          {"rows", rows},
          {"total_closed_form", to_string(counts.closed_total)},
          {"total_enumerated", counts.enumerated_total},
          {"consistent", counts.consistent()}};
}

json to_json(const Multigraph& g, const CrossingCertificate& cert) {
  json witness = json::array();
  for (const CrossingPair& p : cert.witness) {
    const Edge& e = g.edge(p.first);
    const Edge& f = g.edge(p.second);
    witness.push_back({{"edges", {p.first, p.second}},
                       {"vertices", {g.index_of(e.u), g.index_of(e.v), g.index_of(f.u), g.index_of(f.v)}}});
  }
  json orderings = json::object();
  for (const auto& [e, order] : cert.orderings) orderings[std::to_string(e)] = order;
  json j{{"k", cert.k}, {"witness", witness}, {"orderings", orderings}};
  j["exhausted_level"] = cert.exhausted_level ? json(*cert.exhausted_level) : json(nullptr);
  return j;
}

json to_json(const Multigraph& g, const OracleResult& r) {
  json j{{"status", status_name(r.status)}, {"highest_exhausted", r.highest_exhausted}};
  if (r.certificate) j["certificate"] = to_json(g, *r.certificate);
  return j;
}

CrossingCertificate certificate_from_json(const json& j) {
  CrossingCertificate cert;
  cert.k = j.at("k").get<std::size_t>();
  for (const auto& w : j.at("witness")) {
    const auto& e = w.at("edges");
    cert.witness.push_back({e.at(0).get<EdgeId>(), e.at(1).get<EdgeId>()});
  }
  for (const auto& [key, order] : j.at("orderings").items()) {
    cert.orderings[std::stoul(key)] = order.get<std::vector<std::size_t>>();
  }
  if (j.contains("exhausted_level") && !j.at("exhausted_level").is_null()) {
    cert.exhausted_level = j.at("exhausted_level").get<std::size_t>();
  }
  return cert;
}

const char* status_name(OracleResult::Status status) {
  switch (status) {
    case OracleResult::Status::kExact: return "exact";
    case OracleResult::Status::kAboveMaxK: return "above_max_k";
    case OracleResult::Status::kBudgetExceeded: return "exceeded";
  }
  return "unknown";
}

const char* verdict_name(CriticalityReport::Verdict verdict) {
  switch (verdict) {
    case CriticalityReport::Verdict::kCritical: return "critical";
    case CriticalityReport::Verdict::kNotCritical: return "not_critical";
    case CriticalityReport::Verdict::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

void write_bound_csv(const std::vector<std::pair<Rational, Rational>>& samples, int digits, std::ostream& os) {
  os << "x,f(x)\n";
  for (const auto& [x, fx] : samples) os << x.to_decimal(digits) << ',' << fx.to_decimal(digits) << '\n';
}

}  // namespace critcross
