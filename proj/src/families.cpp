#include "critcross/families.hpp"

#include <algorithm>
#include <limits>

namespace critcross {

namespace {

std::string failure_message(const CheckReport& report) {
  const Clause* c = report.first_failure();
  if (c == nullptr) return "constraint violation";
  return "constraint violated: " + c->clause + " (lhs " + c->lhs + ", rhs " + c->rhs + ")";
}

void add_integer(CheckReport& report, const char* name, const Rational& x) {
  report.add(std::string(name) + " integer", x.is_integer(), x.str(), "integer");
}

void add_at_least(CheckReport& report, const char* name, const Rational& x, const Rational& bound) {
  report.add(std::string(name) + " >= " + bound.str(), x >= bound, x.str(), bound.str());
}

Rational crn_s_rational(const Rational& n) { return n * (n - 1) / 2 - 1; }
Rational crn_h_rational(const Rational& w) { return 31 + 8 * w * (7 + 4 * w); }

CheckReport structural_s(const SParams& p) {
  CheckReport r;
  add_at_least(r, "n", p.n, 3);
  add_at_least(r, "m", p.m, 1);
  add_at_least(r, "c", p.c, 0);
  const BigInt thick = thick_count(p.n, p.m);
  r.add("c <= 2m(n-3)", p.c <= thick, p.c.str(), thick.str());
  return r;
}

CheckReport structural_h(const HParams& p) {
  CheckReport r;
  add_at_least(r, "w", p.w, 0);
  add_at_least(r, "s", p.s, 1);
  return r;
}

CheckReport structural_r(const RParams& p) {
  CheckReport r;
  add_at_least(r, "p", p.p, 1);
  add_at_least(r, "q", p.q, 0);
  return r;
}

void require(const CheckReport& report) {
  if (!report.all_pass()) throw ConstraintViolation(report);
}

std::uint64_t to_u64(const BigInt& x) {
  if (x < 0 || x > std::numeric_limits<std::uint64_t>::max()) throw GraphError("value out of range: " + x.str());
  return x.convert_to<std::uint64_t>();
}

void require_under_cap(const DegreeCensus3456& census, std::uint64_t cap) {
  if (census.total() > cap) throw SizeCapExceeded(census, cap);
}

Multigraph finish(Multigraph g, const DegreeCensus3456& expected, const char* family) {
  if (!g.is_simple()) throw GraphError(std::string(family) + ": construction produced parallel edges");
  const DegreeCensus3456 got = degree_census(g);
  if (got != expected) {
    throw std::logic_error(std::string(family) + ": explicit census " + got.str() +
                           " disagrees with formula " + expected.str());
  }
  return g;
}

Multigraph join_kinds(const std::vector<TileKind>& kinds) {
  std::vector<Tile> tiles;
  tiles.reserve(kinds.size());
  // a sequence only ever uses a handful of distinct kinds
  std::vector<std::pair<TileKind, Tile>> prototypes;
  for (const TileKind& kind : kinds) {
    auto it = std::find_if(prototypes.begin(), prototypes.end(), [&](const auto& p) {
      return p.first.shape == kind.shape && p.first.parameter == kind.parameter;
    });
    if (it == prototypes.end()) {
      prototypes.emplace_back(kind, make_tile(kind));
      it = prototypes.end() - 1;
    }
    tiles.push_back(it->second);
  }
  return join_cyclic(tiles);
}

}  // namespace

ConstraintViolation::ConstraintViolation(CheckReport report)
    : std::runtime_error(failure_message(report)), report_(std::move(report)) {}

SizeCapExceeded::SizeCapExceeded(DegreeCensus3456 census, std::uint64_t cap)
    : std::runtime_error("size cap exceeded: " + census.total().str() + " vertices > cap " + std::to_string(cap)),
      census_(std::move(census)) {}

BigInt thick_count(const BigInt& n, const BigInt& m) { return 2 * m * (n - 3); }

DegreeCensus3456 census_s(const SParams& p) {
  require(structural_s(p));
  return {4 * p.m * (p.n - 2) - 2 * p.c, p.m + p.c, 0, 0};
}

DegreeCensus3456 census_h(const HParams& p) {
  require(structural_h(p));
  return {4 * p.s, 2 * p.s, 0, (4 * p.w + 3) * p.s};
}

DegreeCensus3456 census_r(const RParams& p) {
  require(structural_r(p));
  return {4 * p.p + 3 * p.q + 2, 0, 3 * p.q, 0};
}

DegreeCensus3456 census_gamma(const GammaParams& p) {
  return zip3_census(zip3_census(census_s(p.s_part()), census_h(p.h_part())), census_r(p.r_part()));
}

BigInt crn_s(const BigInt& n) { return n * (n - 1) / 2 - 1; }
BigInt crn_h(const BigInt& w) { return 31 + 8 * w * (7 + 4 * w); }
BigInt crn_r(const BigInt& p, const BigInt& q) { return p + 4 * q; }
BigInt crn_gamma(const GammaParams& p) { return crn_s(p.n) + crn_h(p.w) + crn_r(p.p, p.q); }

CheckReport constraint_s(const Rational& n, const Rational& m, const Rational& c) {
  CheckReport r;
  add_integer(r, "n", n);
  add_at_least(r, "n", n, 3);
  const Rational mp = (m - 1) / 2;
  r.add("(m-1)/2 integer (m odd)", mp.is_integer(), mp.str(), "integer");
  const Rational m_bound = 4 * crn_s_rational(n);
  r.add("m > 4*crn_s(n)", m > m_bound, m.str(), m_bound.str());
  add_integer(r, "c", c);
  add_at_least(r, "c", c, 0);
  const Rational thick = 2 * m * (n - 3);
  r.add("c <= 2m(n-3)", c <= thick, c.str(), thick.str());
  return r;
}

CheckReport constraint_h(const Rational& w, const Rational& s) {
  CheckReport r;
  add_integer(r, "w", w);
  add_at_least(r, "w", w, 0);
  add_integer(r, "s", s);
  const Rational s_bound = 4 * crn_h_rational(w);
  r.add("s > 4*crn_h(w)", s > s_bound, s.str(), s_bound.str());
  return r;
}

CheckReport constraint_r(const Rational& p, const Rational& q) {
  CheckReport r;
  add_integer(r, "p", p);
  add_at_least(r, "p", p, 1);
  add_integer(r, "q", q);
  add_at_least(r, "q", q, 1);
  return r;
}

CheckReport constraint_gamma(const Rational& n, const Rational& m, const Rational& c, const Rational& w,
                             const Rational& s, const Rational& p, const Rational& q) {
  CheckReport r = constraint_s(n, m, c);
  r.append(constraint_h(w, s));
  r.append(constraint_r(p, q));
  return r;
}

CheckReport constraint_gamma(const GammaParams& p) {
  return constraint_gamma(p.n, p.m, p.c, p.w, p.s, p.p, p.q);
}

std::uint64_t default_twist_position(std::uint64_t m) {
  if (m == 0) throw GraphError("sequence length must be positive");
  return 2 * ((m - 1) / 4) + 1;
}

std::vector<TileKind> s_tile_sequence(int n, std::uint64_t m, std::uint64_t twist_position) {
  if (twist_position < 1 || twist_position > m || twist_position % 2 == 0) {
    throw GraphError("twisted tile position must be odd and within 1.." + std::to_string(m));
  }
  std::vector<TileKind> kinds;
  kinds.reserve(m);
  for (std::uint64_t pos = 1; pos <= m; ++pos) {
    if (pos == twist_position) {
      kinds.push_back(TileKind::staircase_twisted(n));
      continue;
    }
    const std::uint64_t offset = pos < twist_position ? pos : pos - twist_position;
    kinds.push_back(offset % 2 == 1 ? TileKind::staircase(n) : TileKind::staircase_inverted(n));
  }
  return kinds;
}

std::vector<TileKind> h_tile_sequence(int w, std::uint64_t s) {
  if (s < 2) throw GraphError("H sequence needs at least the two twisted tiles");
  std::vector<TileKind> kinds(s - 2, TileKind::h_tile(w));
  kinds.push_back(TileKind::h_tile_twisted(w));
  kinds.push_back(TileKind::h_tile_twisted(w));
  return kinds;
}

Multigraph build_s(const SParams& params, const BuildOptions& options) {
  const DegreeCensus3456 expected = census_s(params);
  require_under_cap(expected, options.size_cap);
  const std::uint64_t m = to_u64(params.m);
  const int n = static_cast<int>(to_u64(params.n));
  const Multigraph joined =
      join_kinds(s_tile_sequence(n, m, options.twist_position.value_or(default_twist_position(m))));
  const auto c = static_cast<std::size_t>(to_u64(params.c));
  const auto selection = options.selection.mode == ThickSelection::Mode::kCanonical
                             ? canonical_thick_selection(joined, c)
                             : random_thick_selection(joined, c, options.selection.seed);
  return finish(contract_thick(joined, selection), expected, "build_s");
}

Multigraph build_h(const HParams& params, const BuildOptions& options) {
  const DegreeCensus3456 expected = census_h(params);
  require_under_cap(expected, options.size_cap);
  const int w = static_cast<int>(to_u64(params.w));
  return finish(join_kinds(h_tile_sequence(w, to_u64(params.s))), expected, "build_h");
}

Multigraph build_r(const RParams& params, const BuildOptions& options) {
  const DegreeCensus3456 expected = census_r(params);
  require_under_cap(expected, options.size_cap);
  const Multigraph k33 = complete_bipartite(3, 3);
  const Multigraph k35 = complete_bipartite(3, 5);
  const VertexId k33_zip = *lowest_degree3_vertex(k33);
  const VertexId k35_zip = *lowest_degree3_vertex(k35);
  Multigraph g = k33;
  for (std::uint64_t i = 1; i < to_u64(params.p); ++i) g = zip_product(g, *lowest_degree3_vertex(g), k33, k33_zip);
  for (std::uint64_t j = 0; j < to_u64(params.q); ++j) g = zip_product(g, *lowest_degree3_vertex(g), k35, k35_zip);
  return finish(std::move(g), expected, "build_r");
}

Multigraph build_gamma(const GammaParams& params, const BuildOptions& options) {
  const DegreeCensus3456 expected = census_gamma(params);
  require_under_cap(expected, options.size_cap);
  const Multigraph s = build_s(params.s_part(), options);
  const Multigraph h = build_h(params.h_part(), options);
  const Multigraph r = build_r(params.r_part(), options);
  const Multigraph sh = zip_product(s, *lowest_degree3_vertex(s), h, *lowest_degree3_vertex(h));
  return finish(zip_product(sh, *lowest_degree3_vertex(sh), r, *lowest_degree3_vertex(r)), expected,
                "build_gamma");
}

}  // namespace critcross
