#include <doctest.h>

#include <random>

#include "critcross/families.hpp"
#include "critcross/planarity.hpp"

using namespace critcross;

namespace {

Rational edge_average(const Multigraph& g) {
  return Rational(2 * g.edge_count(), g.vertex_count());
}

BigInt smallest_valid_m(const BigInt& n) {
  BigInt m = 4 * crn_s(n) + 1;
  if (m % 2 == 0) ++m;
  return m;
}

}  // namespace

TEST_CASE("S census examples") {
  CHECK(census_s({3, 9, 0}) == DegreeCensus3456(36, 9, 0, 0));
  const DegreeCensus3456 c = census_s({5, 153, 561});
  CHECK(c == DegreeCensus3456(714, 714, 0, 0));
  CHECK(average_degree(c) == Rational(7, 2));
}

TEST_CASE("S average degree closed form") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const BigInt n = 3 + rng() % 20;
    const BigInt mp = rng() % 200;
    const BigInt m = 2 * mp + 1;
    const BigInt c = BigInt(rng() % 1000) % (2 * m * (n - 3) + 1);
    const Rational lhs = average_degree(census_s({n, m, c})) - 3;
    const Rational rhs = Rational(1 + c + 2 * mp, (1 + 2 * mp) * (4 * n - 7) - c);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("H census and its average") {
  CHECK(census_h({0, 1}) == DegreeCensus3456(4, 2, 0, 3));
  for (int w = 0; w <= 20; ++w) {
    for (int s : {1, 7, 1000}) {
      CHECK(average_degree(census_h({w, s})) == 6 - Rational(16, 9 + 4 * w));
    }
  }
}

TEST_CASE("R census and its average") {
  CHECK(census_r({1, 0}) == DegreeCensus3456(6, 0, 0, 0));
  CHECK(census_r({3, 2}) == DegreeCensus3456(20, 0, 6, 0));
  for (int p = 1; p <= 15; ++p) {
    for (int q = 1; q <= 15; ++q) {
      CHECK(average_degree(census_r({p, q})) == Rational(3 + 6 * p + 12 * q, 1 + 2 * p + 3 * q));
    }
  }
}

TEST_CASE("Gamma census example") {
  const GammaParams p{4, 17273, 37, 2, 7712, 177, 7};
  const DegreeCensus3456 c = census_gamma(p);
  CHECK(c == DegreeCensus3456(169685, 32734, 21, 84832));
  CHECK(average_degree(c) == 4);
  // independent recomputation: zipping deletes one degree-3 vertex per operand
  const DegreeCensus3456 s = census_s(p.s_part()), h = census_h(p.h_part()), r = census_r(p.r_part());
  CHECK(c.n3 == s.n3 + h.n3 + r.n3 - 4);
  CHECK(c.n4 == s.n4 + h.n4 + r.n4);
}

TEST_CASE("crossing-number formulas") {
  CHECK(crn_s(4) == 5);
  CHECK(crn_s(3) == 2);
  CHECK(crn_h(0) == 31);
  CHECK(crn_h(2) == 271);
  CHECK(crn_r(1, 1) == 5);
  CHECK(crn_r(2, 0) == 2);
  CHECK(crn_gamma({4, 17273, 37, 2, 7712, 177, 7}) == 481);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const GammaParams p{3 + rng() % 30, 1, 0, rng() % 30, 1, 1 + rng() % 100, rng() % 100};
    CHECK(crn_gamma(p) == 30 + p.n * (p.n - 1) / 2 + p.p + 4 * p.q + 8 * p.w * (7 + 4 * p.w));
  }
}

TEST_CASE("S constraints") {
  CHECK(constraint_s(3, 9, 0).all_pass());
  const CheckReport bad = constraint_s(3, 8, 0);
  CHECK_FALSE(bad.all_pass());
  int failures = 0;
  for (const Clause& c : bad.clauses) {
    if (!c.pass) {
      ++failures;
      CHECK((c.clause.find("odd") != std::string::npos || c.clause.find("m >") != std::string::npos));
    }
  }
  CHECK(failures == 2);
  CHECK_FALSE(constraint_s(3, 9, 1).all_pass());  // 2m(n-3) = 0
  CHECK_FALSE(constraint_s(Rational(7, 2), 101, 0).all_pass());
  CHECK_FALSE(constraint_s(4, 21, -1).all_pass());
  CHECK(constraint_s(4, 21, 42).all_pass());
  CHECK_FALSE(constraint_s(4, 21, 43).all_pass());
}

TEST_CASE("H and R constraints") {
  CHECK_FALSE(constraint_h(2, 1084).all_pass());
  CHECK(constraint_h(2, 1085).all_pass());
  CHECK_FALSE(constraint_h(-1, 10000).all_pass());
  CHECK_FALSE(constraint_h(Rational(1, 2), 10000).all_pass());
  CHECK(constraint_r(1, 1).all_pass());
  CHECK_FALSE(constraint_r(1, 0).all_pass());
  CHECK_FALSE(constraint_r(0, 1).all_pass());
  CHECK_FALSE(constraint_r(2, Rational(3, 2)).all_pass());
}

TEST_CASE("constraint reports carry both sides") {
  const CheckReport r = constraint_h(2, 1084);
  const Clause* f = r.first_failure();
  REQUIRE(f != nullptr);
  CHECK(f->lhs == "1084");
  CHECK(f->rhs == "1084");
  CHECK(constraint_gamma({4, 17273, 37, 2, 7712, 177, 7}).all_pass());
  CHECK(constraint_gamma({4, 17273, 37, 2, 7712, 177, 7}).clauses.size() ==
        constraint_s(4, 17273, 37).clauses.size() + constraint_h(2, 7712).clauses.size() +
            constraint_r(177, 7).clauses.size());
}

TEST_CASE("census outside the structural domain throws a report") {
  try {
    census_s({3, 9, 1});
    FAIL("expected ConstraintViolation");
  } catch (const ConstraintViolation& e) {
    CHECK_FALSE(e.report().all_pass());
    CHECK(std::string(e.what()).find("c <= 2m(n-3)") != std::string::npos);
  }
  CHECK_THROWS_AS(census_h({0, 0}), ConstraintViolation);
  CHECK_THROWS_AS(census_r({0, 1}), ConstraintViolation);
}

TEST_CASE("R builds") {
  const Multigraph r10 = build_r({1, 0});
  CHECK(r10.vertex_count() == 6);
  CHECK(r10.edge_count() == 9);
  CHECK_FALSE(is_planar(r10));
  CHECK(degree_census(build_r({3, 2})) == DegreeCensus3456(20, 0, 6, 0));
  const Multigraph r21 = build_r({2, 1});
  CHECK(degree_census(r21) == DegreeCensus3456(13, 0, 3, 0));
  CHECK(r21.vertex_count() == 16);
}

TEST_CASE("explicit builds match the census at the smallest valid parameters") {
  for (int n = 3; n <= 5; ++n) {
    const BigInt m = smallest_valid_m(n);
    for (const BigInt& c : {BigInt(0), thick_count(n, m)}) {
      const SParams p{n, m, c};
      REQUIRE(constraint_s(p.n, p.m, p.c).all_pass());
      const Multigraph g = build_s(p);
      CHECK(degree_census(g) == census_s(p));
      CHECK(edge_average(g) == average_degree(census_s(p)));
    }
  }
  for (int w = 0; w <= 1; ++w) {
    const HParams p{w, 4 * crn_h(w) + 1};
    REQUIRE(constraint_h(p.w, p.s).all_pass());
    CHECK(degree_census(build_h(p)) == census_h(p));
  }
  for (int p = 1; p <= 4; ++p) {
    for (int q = 0; q <= 3; ++q) CHECK(degree_census(build_r({p, q})) == census_r({p, q}));
  }
}

TEST_CASE("Gamma builds on small structural parameters") {
  const GammaParams p{4, 7, 5, 0, 5, 2, 1};
  const Multigraph g = build_gamma(p);
  CHECK(g.is_simple());
  CHECK(degree_census(g) == census_gamma(p));
  const Multigraph again = build_gamma(p);
  CHECK(std::equal(g.edges().begin(), g.edges().end(), again.edges().begin(), again.edges().end(),
                   [](const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v && a.label == b.label; }));
}

TEST_CASE("size cap stops explicit builds but keeps the census") {
  BuildOptions options;
  options.size_cap = 100;
  try {
    build_s({4, 21, 0}, options);
    FAIL("expected SizeCapExceeded");
  } catch (const SizeCapExceeded& e) {
    CHECK(e.census() == census_s({4, 21, 0}));
  }
  CHECK_THROWS_AS(build_gamma({4, 17273, 37, 2, 7712, 177, 7}, options), SizeCapExceeded);
}

TEST_CASE("thick count") {
  CHECK(thick_count(3, 9) == 0);
  CHECK(thick_count(5, 153) == 612);
}
