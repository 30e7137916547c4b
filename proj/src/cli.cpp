#include "critcross/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "critcross/families.hpp"
#include "critcross/oracle.hpp"
#include "critcross/pairs.hpp"
#include "critcross/planarity.hpp"
#include "critcross/serialize.hpp"
#include "critcross/solver.hpp"

namespace critcross {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised after the report has already been printed.
struct ExitWith {
  int code;
};

constexpr std::size_t kPlanarityCheckLimit = 20'000;

BigInt int_arg(const std::string& name, const std::string& text) {
  try {
    return parse_bigint(text);
  } catch (const std::exception&) {
    throw UsageError("--" + name + ": not an integer: '" + text + "'");
  }
}

Rational rational_arg(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("--" + name + ": not a rational: '" + text + "'");
  }
}

std::string require(const CLI::App* sub, const std::string& name, const std::string& value) {
  if (sub->count("--" + name) == 0) throw UsageError("missing --" + name);
  return value;
}

void print_checks(const CheckReport& report, std::ostream& out, bool failures_only) {
  for (const Clause& c : report.clauses) {
    if (failures_only && c.pass) continue;
    out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.clause << "  (lhs " << c.lhs << ", rhs " << c.rhs
        << ")\n";
  }
}

std::string census_line(const DegreeCensus3456& c) {
  std::ostringstream os;
  os << "census " << c.str() << "  vertices " << c.total() << "  edges " << c.degree_sum() / 2;
  if (c.total() > 0) os << "  average degree " << average_degree(c);
  return os.str();
}

// ---------------------------------------------------------------- derive

struct DeriveArgs {
  std::string a, b, k, t, r;
  bool json = false;
};

struct AbInput {
  BigInt a, b;
};

AbInput resolve_ab(const CLI::App* sub, const std::string& a, const std::string& b, const std::string& r) {
  const bool has_r = sub->count("--r") > 0;
  const bool has_ab = sub->count("--a") > 0 || sub->count("--b") > 0;
  if (has_r && has_ab) throw UsageError("give either --r or --a/--b, not both");
  if (has_r) {
    const Rational x = rational_arg("r", r) - 3;
    return {x.num(), x.den()};
  }
  return {int_arg("a", require(sub, "a", a)), int_arg("b", require(sub, "b", b))};
}

DerivationReport derive_from(const CLI::App* sub, const std::string& a, const std::string& b, const std::string& k,
                             const std::string& t, const std::string& r) {
  const AbInput ab = resolve_ab(sub, a, b, r);
  const BigInt kk = int_arg("k", require(sub, "k", k));
  const BigInt tt = sub->count("--t") > 0 ? int_arg("t", t) : BigInt(kk + 1);
  return derive_params(ab.a, ab.b, kk, tt);
}

int cmd_derive(const CLI::App* sub, const DeriveArgs& args, std::ostream& out) {
  const DerivationReport rep = derive_from(sub, args.a, args.b, args.k, args.t, args.r);
  if (args.json) {
    out << to_json(rep).dump(2) << '\n';
    return rep.all_pass() ? kExitOk : kExitConstraint;
  }
  const DivisionChain& c = rep.chain;
  const GammaParams& p = rep.params;
  out << "inputs      a=" << rep.a << " b=" << rep.b << " k=" << rep.k << " t=" << rep.t << '\n'
      << "divisions   bp=" << c.bp << " br=" << c.br << " bpp=" << c.bpp << " bpr=" << c.bpr << " bb=" << c.bb
      << " bbr=" << c.bbr << '\n'
      << "threshold   N=" << rep.N << '\n'
      << "dividend    " << rep.dividend << " = " << rep.kp << "*" << (2 * c.bpp + 5) << " + " << rep.kr
      << "  (kp=" << rep.kp << ", kr=" << rep.kr << ")\n"
      << "parameters  n=" << p.n << " m=" << p.m << " c=" << p.c << " w=" << p.w << " s=" << p.s << " p=" << p.p
      << " q=" << p.q << '\n';
  if (rep.census.total() > 0) {
    out << "crn_gamma   " << rep.crn << '\n' << census_line(rep.census) << '\n';
  }
  const auto passed = std::count_if(rep.checks.clauses.begin(), rep.checks.clauses.end(),
                                    [](const Clause& cl) { return cl.pass; });
  out << "checks      " << passed << "/" << rep.checks.clauses.size() << " pass\n";
  print_checks(rep.checks, out, false);
  return rep.all_pass() ? kExitOk : kExitConstraint;
}

// ---------------------------------------------------------------- family parameters

struct FamilyArgs {
  std::string family;
  std::string n, m, c, w, s, p, q;
  std::string a, b, k, t, r;
  std::size_t left = 0, right = 0;
  bool allow_noncritical = false;
  bool json = false;

  void attach(CLI::App* sub) {
    for (auto [name, target] : {std::pair{"--n", &n}, {"--m", &m}, {"--c", &c}, {"--w", &w}, {"--s", &s},
                                {"--p", &p}, {"--q", &q}}) {
      sub->add_option(name, *target, "family parameter");
    }
    sub->add_option("--a", a, "gamma via derive: r = 3 + a/b");
    sub->add_option("--b", b, "gamma via derive");
    sub->add_option("--k", k, "gamma via derive: crossing number");
    sub->add_option("--t", t, "gamma via derive: free parameter, default k+1");
    sub->add_option("--r", r, "gamma via derive: average degree as a rational");
    sub->add_option("--left", left, "bipartite: first class size");
    sub->add_option("--right", right, "bipartite: second class size");
    sub->add_flag("--allow-noncritical", allow_noncritical,
                  "only require the structural domain, not the criticality constraints");
    sub->add_flag("--json", json, "machine-readable output");
  }
};

struct FamilySpec {
  std::string family;
  json params = json::object();
  CheckReport constraints;
  // Exactly one of these is engaged, matching `family`.
  std::optional<SParams> s;
  std::optional<HParams> h;
  std::optional<RParams> r;
  std::optional<GammaParams> gamma;

  DegreeCensus3456 census() const {
    if (s) return census_s(*s);
    if (h) return census_h(*h);
    if (r) return census_r(*r);
    return census_gamma(*gamma);
  }
  BigInt crn() const {
    if (s) return crn_s(s->n);
    if (h) return crn_h(h->w);
    if (r) return crn_r(r->p, r->q);
    return crn_gamma(*gamma);
  }
  Multigraph build(const BuildOptions& options) const {
    if (s) return build_s(*s, options);
    if (h) return build_h(*h, options);
    if (r) return build_r(*r, options);
    return build_gamma(*gamma, options);
  }
};

FamilySpec resolve_family(const CLI::App* sub, const FamilyArgs& f) {
  FamilySpec spec;
  spec.family = f.family;
  auto get = [&](const char* name, const std::string& value) { return int_arg(name, require(sub, name, value)); };
  if (f.family == "s") {
    spec.s = SParams{get("n", f.n), get("m", f.m), get("c", f.c)};
    spec.constraints = constraint_s(spec.s->n, spec.s->m, spec.s->c);
    spec.params = {{"n", to_string(spec.s->n)}, {"m", to_string(spec.s->m)}, {"c", to_string(spec.s->c)}};
  } else if (f.family == "h") {
    spec.h = HParams{get("w", f.w), get("s", f.s)};
    spec.constraints = constraint_h(spec.h->w, spec.h->s);
    spec.params = {{"w", to_string(spec.h->w)}, {"s", to_string(spec.h->s)}};
  } else if (f.family == "r") {
    spec.r = RParams{get("p", f.p), get("q", f.q)};
    spec.constraints = constraint_r(spec.r->p, spec.r->q);
    spec.params = {{"p", to_string(spec.r->p)}, {"q", to_string(spec.r->q)}};
  } else {
    const bool via_derive = sub->count("--k") > 0;
    if (via_derive) {
      const DerivationReport rep = derive_from(sub, f.a, f.b, f.k, f.t, f.r);
      spec.gamma = rep.params;
    } else {
      spec.gamma = GammaParams{get("n", f.n), get("m", f.m), get("c", f.c), get("w", f.w),
                               get("s", f.s), get("p", f.p), get("q", f.q)};
    }
    spec.constraints = constraint_gamma(*spec.gamma);
    spec.params = to_json(*spec.gamma);
  }
  return spec;
}

/// Prints the failing clauses and stops unless the structural domain suffices.
void enforce_constraints(const FamilySpec& spec, const FamilyArgs& f, std::ostream& out, std::ostream& err) {
  if (spec.constraints.all_pass() || f.allow_noncritical) return;
  if (f.json) {
    out << json{{"family", spec.family}, {"params", spec.params}, {"constraints", to_json(spec.constraints)}}.dump(2)
        << '\n';
  }
  err << "error: constraint violated for family " << spec.family << '\n';
  print_checks(spec.constraints, err, true);
  throw ExitWith{kExitConstraint};
}

// ---------------------------------------------------------------- build

struct BuildArgs {
  FamilyArgs family;
  std::string out_path;
  std::string format;
  std::uint64_t size_cap = kDefaultSizeCap;
  std::uint64_t seed = 0;
  std::uint64_t twist_position = 0;
};

void write_graph(const Multigraph& g, const std::string& path, const std::string& format) {
  std::string fmt = format;
  if (fmt.empty()) fmt = path.size() >= 4 && path.ends_with(".dot") ? "dot" : "edges";
  std::ofstream os(path);
  if (!os) throw UsageError("cannot open output file '" + path + "'");
  if (fmt == "dot") {
    write_dot(g, os);
  } else {
    write_edge_list(g, os);
  }
  if (!os) throw std::runtime_error("failed writing '" + path + "'");
}

int cmd_build(const CLI::App* sub, const BuildArgs& args, std::ostream& out, std::ostream& err) {
  const FamilyArgs& f = args.family;
  if (f.family == "bipartite") {
    if (f.left == 0 || f.right == 0) throw UsageError("bipartite needs positive --left and --right");
    const Multigraph g = complete_bipartite(f.left, f.right);
    if (!args.out_path.empty()) write_graph(g, args.out_path, args.format);
    if (f.json) {
      out << json{{"family", "bipartite"}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()},
                  {"output", args.out_path}}
                 .dump(2)
          << '\n';
    } else {
      out << "K_{" << f.left << "," << f.right << "}  vertices " << g.vertex_count() << "  edges " << g.edge_count()
          << '\n';
    }
    return kExitOk;
  }

  const FamilySpec spec = resolve_family(sub, f);
  enforce_constraints(spec, f, out, err);
  const DegreeCensus3456 census = spec.census();
  const BigInt crn = spec.crn();
  json doc{{"family", spec.family}, {"params", spec.params}, {"constraints", to_json(spec.constraints)},
           {"census", to_json(census)}, {"crn", to_string(crn)}};
  if (!f.json) out << census_line(census) << "\ncrn " << crn << '\n';

  int code = kExitOk;
  if (!args.out_path.empty()) {
    BuildOptions options;
    options.size_cap = args.size_cap;
    if (sub->count("--seed") > 0) options.selection = ThickSelection::seeded(args.seed);
    if (sub->count("--twist-position") > 0) options.twist_position = args.twist_position;
    try {
      const Multigraph g = spec.build(options);
      write_graph(g, args.out_path, args.format);
      doc["output"] = args.out_path;
      if (!f.json) out << "wrote " << args.out_path << " (" << g.vertex_count() << " vertices, " << g.edge_count()
                       << " edges)\n";
    } catch (const SizeCapExceeded& e) {
      doc["error"] = e.what();
      err << "error: " << e.what() << "; census reported only\n";
      code = kExitExceeded;
    }
  }
  if (f.json) out << doc.dump(2) << '\n';
  return code;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  FamilyArgs family;
  std::string graph_path;
  bool explicit_build = false;
};

Multigraph load_graph(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw UsageError("cannot open graph file '" + path + "'");
  try {
    return read_edge_list(is);
  } catch (const GraphError& e) {
    throw UsageError("'" + path + "': " + e.what());
  }
}

int cmd_verify_graph(const VerifyArgs& args, std::ostream& out) {
  const Multigraph g = load_graph(args.graph_path);
  json doc{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"simple", g.is_simple()}};
  std::optional<DegreeCensus3456> census;
  try {
    census = degree_census(g);
    doc["census"] = to_json(*census);
  } catch (const GraphError& e) {
    doc["census_error"] = e.what();
  }
  if (g.vertex_count() > 0) doc["average_degree"] = Rational(2 * g.edge_count(), g.vertex_count()).str();
  if (g.vertex_count() <= kPlanarityCheckLimit) {
    doc["planar"] = is_planar(g);
  } else {
    doc["planar"] = nullptr;
  }
  if (args.family.json) {
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "vertices " << g.vertex_count() << "  edges " << g.edge_count() << "  simple "
      << (g.is_simple() ? "yes" : "no") << '\n';
  if (census) {
    out << census_line(*census) << '\n';
  } else {
    out << "census unavailable: " << doc["census_error"].get<std::string>() << '\n';
    if (g.vertex_count() > 0) out << "average degree " << doc["average_degree"].get<std::string>() << '\n';
  }
  out << "planar " << (doc["planar"].is_null() ? "skipped (graph too large)" : doc["planar"].get<bool>() ? "yes" : "no")
      << '\n';
  return kExitOk;
}

int cmd_verify(const CLI::App* sub, const VerifyArgs& args, std::ostream& out) {
  const bool has_graph = !args.graph_path.empty();
  const bool has_family = !args.family.family.empty();
  if (has_graph == has_family) throw UsageError("verify needs exactly one of a family or --graph");
  if (has_graph) return cmd_verify_graph(args, out);
  if (args.family.family == "bipartite") throw UsageError("verify has no constraints for bipartite");

  const FamilySpec spec = resolve_family(sub, args.family);
  CheckReport report = spec.constraints;
  json doc{{"family", spec.family}, {"params", spec.params}};
  std::optional<DegreeCensus3456> census;
  try {
    census = spec.census();
    doc["census"] = to_json(*census);
    doc["crn"] = to_string(spec.crn());
  } catch (const ConstraintViolation&) {
    // outside the structural domain; the clause list already says why
  }
  if (args.explicit_build && census) {
    try {
      const DegreeCensus3456 got = degree_census(spec.build({}));
      report.add("degree_census(build) = census", got == *census, got.str(), census->str());
    } catch (const SizeCapExceeded& e) {
      report.add("explicit build under size cap", false, to_string(census->total()), std::to_string(kDefaultSizeCap));
    }
  }
  doc["checks"] = to_json(report);
  doc["all_pass"] = report.all_pass();
  if (args.family.json) {
    out << doc.dump(2) << '\n';
  } else {
    out << "family " << spec.family << "  " << spec.params.dump() << '\n';
    if (census) out << census_line(*census) << "\ncrn " << spec.crn() << '\n';
    out << "checks " << (report.all_pass() ? "all pass" : "FAILED") << '\n';
    print_checks(report, out, false);
  }
  return report.all_pass() ? kExitOk : kExitConstraint;
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  std::string graph_path;
  std::size_t max_k = 8;
  double budget_secs = 0;
  unsigned threads = 0;
  bool critical = false;
  bool no_triangle_bound = false;
  std::string certificate_out;
  bool json = false;
};

std::chrono::milliseconds resolve_budget(const CLI::App* sub, double flag_secs) {
  double secs = std::chrono::duration<double>(kDefaultOracleBudget).count();
  if (sub->count("--budget-secs") > 0) {
    if (flag_secs <= 0) throw UsageError("--budget-secs must be positive");
    secs = flag_secs;
  } else if (const char* env = std::getenv("CRITCROSS_BUDGET_SECS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    secs = std::strtod(env, &end);
    if (end == env || *end != '\0' || secs <= 0) throw UsageError("CRITCROSS_BUDGET_SECS must be a positive number");
  }
  return std::chrono::milliseconds(static_cast<long long>(secs * 1000.0));
}

int cmd_oracle(const CLI::App* sub, const OracleArgs& args, std::ostream& out, std::ostream& err) {
  const Multigraph g = load_graph(args.graph_path);
  if (!g.is_simple()) throw UsageError("the crossing oracle needs a simple graph");
  OracleOptions options;
  options.max_k = args.max_k;
  options.budget = resolve_budget(sub, args.budget_secs);
  options.threads = args.threads;
  options.triangle_free_bound = !args.no_triangle_bound;

  const OracleResult result = crossing_number_exact(g, options);
  json doc = to_json(g, result);
  int code = kExitOk;
  std::ostringstream text;
  switch (result.status) {
    case OracleResult::Status::kExact: {
      const CrossingCertificate& cert = *result.certificate;
      text << "cr = " << cert.k;
      if (cert.exhausted_level) text << " (exhausted k ≤ " << *cert.exhausted_level << ")";
      text << '\n';
      break;
    }
    case OracleResult::Status::kAboveMaxK:
      text << "cr > " << args.max_k << " (exhausted k ≤ " << result.highest_exhausted << ")\n";
      break;
    case OracleResult::Status::kBudgetExceeded:
      text << "exceeded: budget ran out";
      if (result.highest_exhausted >= 0) text << " (exhausted k ≤ " << result.highest_exhausted << ")";
      text << '\n';
      code = kExitExceeded;
      break;
  }

  if (!args.certificate_out.empty() && result.certificate) {
    std::ofstream os(args.certificate_out);
    if (!os) throw UsageError("cannot open '" + args.certificate_out + "'");
    os << to_json(g, *result.certificate).dump(2) << '\n';
  }

  if (args.critical && result.status == OracleResult::Status::kExact) {
    const CriticalityReport rep = is_edge_critical(g, result.certificate->k, options);
    json edges = json::array();
    text << "critical: " << verdict_name(rep.verdict) << '\n';
    for (const EdgeCriticality& e : rep.edges) {
      const Edge& edge = g.edge(e.edge);
      json item{{"edge", e.edge}, {"u", g.index_of(edge.u)}, {"v", g.index_of(edge.v)}, {"status", status_name(e.status)}};
      text << "  edge " << e.edge << " (" << g.index_of(edge.u) << "-" << g.index_of(edge.v) << "): ";
      if (e.reduced_value) {
        item["cr_without"] = *e.reduced_value;
        text << "cr(g-e) = " << *e.reduced_value << '\n';
      } else if (e.status == OracleResult::Status::kAboveMaxK) {
        text << "cr(g-e) ≥ " << result.certificate->k << '\n';
      } else {
        text << "inconclusive\n";
      }
      edges.push_back(item);
    }
    doc["criticality"] = {{"verdict", verdict_name(rep.verdict)}, {"edges", edges}};
    if (rep.verdict == CriticalityReport::Verdict::kInconclusive) code = kExitExceeded;
  }

  if (args.json) {
    out << doc.dump(2) << '\n';
  } else {
    out << text.str();
  }
  if (code == kExitExceeded) err << "error: oracle budget exhausted\n";
  return code;
}

// ---------------------------------------------------------------- pairs

struct PairsArgs {
  int w = 0;
  int d_excluded = 1;
  int e_excluded = 1;
  bool list = false;
  bool json = false;
};

int cmd_pairs(const PairsArgs& args, std::ostream& out) {
  if (args.w < 0) throw UsageError("--w must be nonnegative");
  PairOptions options{args.d_excluded, args.e_excluded};
  PairCounts counts;
  try {
    counts = pair_counts(args.w, options);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const PairFamily family = pair_validity(args.w, options);
  if (args.json) {
    json doc = to_json(counts);
    if (args.list) {
      json pairs = json::array();
      for (const auto& [a, b] : family.pairs()) pairs.push_back({a.str(), b.str()});
      doc["pairs"] = pairs;
    }
    out << doc.dump(2) << '\n';
  } else {
    if (args.list) {
      for (const auto& [a, b] : family.pairs()) out << a.str() << ' ' << b.str() << '\n';
    }
    out << "letter  closed  enumerated\n";
    for (const PairCountRow& row : counts.rows) {
      out << std::left << std::setw(8) << letter_char(row.letter) << std::setw(8) << to_string(row.closed_form)
          << row.enumerated << '\n';
    }
    out << "total " << counts.closed_total << '\n';
  }
  return counts.consistent() ? kExitOk : kExitConstraint;
}

// ---------------------------------------------------------------- bound

struct BoundArgs {
  std::string x, r1, r2, sample, from, to, a, b;
  int digits = 6;
  bool json = false;
};

int cmd_bound(const CLI::App* sub, const BoundArgs& args, std::ostream& out) {
  const bool has_x = sub->count("--x") > 0;
  const bool has_interval = sub->count("--r1") > 0 || sub->count("--r2") > 0;
  const bool has_sample = sub->count("--sample") > 0;
  const bool has_ab = sub->count("--a") > 0 || sub->count("--b") > 0;
  if (has_x + has_interval + has_sample + has_ab != 1) {
    throw UsageError("bound needs exactly one of --x, --r1/--r2, --sample, --a/--b");
  }
  if (args.digits < 0 || args.digits > 60) throw UsageError("--digits must be in 0..60");
  json doc;
  if (has_x) {
    const Rational x = rational_arg("x", args.x);
    const Rational fx = bound_f(x);
    doc = {{"x", x.str()}, {"f", fx.str()}, {"f_decimal", fx.to_decimal(args.digits)}};
    if (!args.json) out << "f(" << x << ") = " << fx << " (" << fx.to_decimal(args.digits) << ")\n";
  } else if (has_interval) {
    const Rational r1 = rational_arg("r1", require(sub, "r1", args.r1));
    const Rational r2 = rational_arg("r2", require(sub, "r2", args.r2));
    const BigInt n = interval_threshold(r1, r2);
    doc = {{"r1", r1.str()}, {"r2", r2.str()}, {"N_I", to_string(n)}};
    if (!args.json) out << "N_I = " << n << '\n';
  } else if (has_ab) {
    const BigInt a = int_arg("a", require(sub, "a", args.a));
    const BigInt b = int_arg("b", require(sub, "b", args.b));
    const BigInt n = bound_N(a, b);
    const Rational x = 3 + Rational(a, b);
    const Rational fx = bound_f(x);
    doc = {{"a", to_string(a)}, {"b", to_string(b)}, {"N", to_string(n)}, {"f", fx.str()}, {"N_le_f", n <= fx}};
    if (!args.json) {
      out << "N = " << n << "  f(" << x << ") = " << fx.to_decimal(args.digits) << "  N <= f: "
          << (Rational(n) <= fx ? "yes" : "no") << '\n';
    }
  } else {
    const Rational step = rational_arg("sample", args.sample);
    if (step <= 0) throw UsageError("--sample step must be positive");
    const Rational from = sub->count("--from") > 0 ? rational_arg("from", args.from) : 3 + step;
    const Rational to = sub->count("--to") > 0 ? rational_arg("to", args.to) : 6 - step;
    const auto samples = sample_bound(from, to, step);
    if (!args.json) {
      write_bound_csv(samples, args.digits, out);
      return kExitOk;
    }
    json rows = json::array();
    for (const auto& [x, fx] : samples) rows.push_back({{"x", x.str()}, {"f", fx.str()}});
    doc = {{"samples", rows}};
  }
  if (args.json) out << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construction kit and verifier for crossing-critical graph families", "critcross"};
  app.require_subcommand(1);

  DeriveArgs derive;
  CLI::App* derive_cmd = app.add_subcommand("derive", "derive family parameters from (a, b, k, t)");
  derive_cmd->add_option("--a", derive.a, "numerator of r - 3");
  derive_cmd->add_option("--b", derive.b, "denominator of r - 3");
  derive_cmd->add_option("--r", derive.r, "average degree r as p/q or a decimal (instead of --a/--b)");
  derive_cmd->add_option("--k", derive.k, "target crossing number");
  derive_cmd->add_option("--t", derive.t, "free parameter t > k (default k+1)");
  derive_cmd->add_flag("--json", derive.json, "machine-readable output");

  const std::vector<std::string> families{"s", "h", "r", "gamma", "bipartite"};

  BuildArgs build;
  CLI::App* build_cmd = app.add_subcommand("build", "print a family's census and optionally write the graph");
  build_cmd->add_option("family", build.family.family, "s | h | r | gamma | bipartite")
      ->required()
      ->check(CLI::IsMember(families));
  build.family.attach(build_cmd);
  build_cmd->add_option("--out", build.out_path, "write the explicit graph here");
  build_cmd->add_option("--format", build.format, "edges | dot (default from the file extension)")
      ->check(CLI::IsMember({"edges", "dot"}));
  build_cmd->add_option("--size-cap", build.size_cap, "maximum vertex count for explicit builds");
  build_cmd->add_option("--seed", build.seed, "seeded thick-edge selection (canonical if absent)");
  build_cmd->add_option("--twist-position", build.twist_position, "odd 1-based position of the twisted S tile");

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a family's constraints or inspect a graph file");
  verify_cmd->add_option("family", verify.family.family, "s | h | r | gamma")->check(CLI::IsMember(families));
  verify.family.attach(verify_cmd);
  verify_cmd->add_option("--graph", verify.graph_path, "edge-list file to inspect");
  verify_cmd->add_flag("--explicit", verify.explicit_build, "also build the graph and compare its census");

  OracleArgs oracle;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "exact crossing number of a small graph");
  oracle_cmd->add_option("graph", oracle.graph_path, "edge-list file")->required();
  oracle_cmd->add_option("--max-k", oracle.max_k, "largest crossing count searched");
  oracle_cmd->add_option("--budget-secs", oracle.budget_secs, "time budget (default 600, or CRITCROSS_BUDGET_SECS)");
  oracle_cmd->add_option("--threads", oracle.threads, "worker threads (0 = hardware)");
  oracle_cmd->add_flag("--critical", oracle.critical, "also test edge-deletion criticality");
  oracle_cmd->add_flag("--no-triangle-bound", oracle.no_triangle_bound, "use only the Euler lower bound");
  oracle_cmd->add_option("--certificate-out", oracle.certificate_out, "write the certificate as JSON");
  oracle_cmd->add_flag("--json", oracle.json, "machine-readable output");

  PairsArgs pairs;
  CLI::App* pairs_cmd = app.add_subcommand("pairs", "count valid twisted path pairs of the H tile");
  pairs_cmd->add_option("--w", pairs.w, "tile parameter")->required();
  pairs_cmd->add_option("--d-excluded", pairs.d_excluded, "S index not paired with D");
  pairs_cmd->add_option("--e-excluded", pairs.e_excluded, "S index not paired with E");
  pairs_cmd->add_flag("--list", pairs.list, "list every pair");
  pairs_cmd->add_flag("--json", pairs.json, "machine-readable output");

  BoundArgs bound;
  CLI::App* bound_cmd = app.add_subcommand("bound", "the threshold function f and derived thresholds");
  bound_cmd->add_option("--x", bound.x, "evaluate f at x");
  bound_cmd->add_option("--r1", bound.r1, "interval start");
  bound_cmd->add_option("--r2", bound.r2, "interval end");
  bound_cmd->add_option("--sample", bound.sample, "CSV samples with this step");
  bound_cmd->add_option("--from", bound.from, "first sample (default 3 + step)");
  bound_cmd->add_option("--to", bound.to, "last sample bound (default 6 - step)");
  bound_cmd->add_option("--a", bound.a, "compare N(a, b) with f(3 + a/b)");
  bound_cmd->add_option("--b", bound.b, "see --a");
  bound_cmd->add_option("--digits", bound.digits, "fractional digits in decimal output");
  bound_cmd->add_flag("--json", bound.json, "machine-readable output");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (derive_cmd->parsed()) return cmd_derive(derive_cmd, derive, out);
    if (build_cmd->parsed()) return cmd_build(build_cmd, build, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify_cmd, verify, out);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_cmd, oracle, out, err);
    if (pairs_cmd->parsed()) return cmd_pairs(pairs, out);
    if (bound_cmd->parsed()) return cmd_bound(bound_cmd, bound, out);
  } catch (const ExitWith& e) {
    return e.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConstraint;
  }
  return kExitUsage;
}

}  // namespace critcross
