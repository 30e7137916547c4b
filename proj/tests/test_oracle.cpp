#include <doctest.h>

#include <random>

#include "critcross/families.hpp"
#include "critcross/oracle.hpp"
#include "critcross/planarity.hpp"

using namespace critcross;

namespace {

std::size_t exact(const Multigraph& g, unsigned threads = 1) {
  OracleOptions options;
  options.threads = threads;
  const OracleResult r = crossing_number_exact(g, options);
  REQUIRE(r.status == OracleResult::Status::kExact);
  return r.certificate->k;
}

Multigraph petersen() {
  Multigraph p(10);
  for (std::uint32_t i = 0; i < 5; ++i) {
    p.add_edge(VertexId{i}, VertexId{(i + 1) % 5});
    p.add_edge(VertexId{i}, VertexId{i + 5});
    p.add_edge(VertexId{5 + i}, VertexId{5 + (i + 2) % 5});
  }
  return p;
}

}  // namespace

TEST_CASE("lower bounds") {
  CHECK(euler_lower_bound(complete_bipartite(3, 3)) == 0);
  CHECK(euler_lower_bound(complete_graph(6)) == 3);
  CHECK(euler_lower_bound(cycle_graph(7)) == 0);
  CHECK(is_triangle_free(complete_bipartite(3, 5)));
  CHECK_FALSE(is_triangle_free(complete_graph(4)));
  CHECK(crossing_lower_bound(complete_bipartite(3, 3)) == 1);
  CHECK(crossing_lower_bound(complete_bipartite(3, 5)) == 3);
  CHECK(crossing_lower_bound(complete_bipartite(3, 5), false) == 0);
}

TEST_CASE("known crossing numbers") {
  CHECK(exact(complete_bipartite(3, 3)) == 1);
  CHECK(exact(complete_graph(5)) == 1);
  CHECK(exact(complete_graph(6)) == 3);
  CHECK(exact(petersen()) == 2);
  CHECK(exact(complete_graph(4)) == 0);
  CHECK(exact(cycle_graph(6)) == 0);
  CHECK(exact(complete_bipartite(3, 4)) == 2);
  CHECK(exact(complete_bipartite(4, 4)) == 4);
  CHECK(exact(complete_bipartite(3, 6)) == 6);
}

TEST_CASE("K35 needs four crossings") {
  const OracleResult r = crossing_number_exact(complete_bipartite(3, 5));
  REQUIRE(r.status == OracleResult::Status::kExact);
  CHECK(r.certificate->k == 4);
  REQUIRE(r.certificate->exhausted_level.has_value());
  CHECK(*r.certificate->exhausted_level == 3);
}

TEST_CASE("the Euler bound alone gives the same value") {
  OracleOptions options;
  options.triangle_free_bound = false;
  const OracleResult r = crossing_number_exact(complete_bipartite(3, 4), options);
  REQUIRE(r.status == OracleResult::Status::kExact);
  CHECK(r.certificate->k == 2);
  // Euler gives nothing for K3,5, so every level below 4 is searched
  const OracleResult k35 = crossing_number_exact(complete_bipartite(3, 5), options);
  REQUIRE(k35.status == OracleResult::Status::kExact);
  CHECK(k35.certificate->k == 4);
  CHECK(k35.highest_exhausted == 3);
}

TEST_CASE("oracle matches p + 4q on small R graphs") {
  for (int p = 1; p <= 4; ++p) {
    INFO("p=" << p);
    CHECK(exact(build_r({p, 0})) == crn_r(p, 0));
  }
}

TEST_CASE("certificates planarize to planar graphs") {
  for (const Multigraph& g : {complete_bipartite(3, 3), complete_graph(6), complete_bipartite(3, 5), petersen()}) {
    const OracleResult r = crossing_number_exact(g);
    REQUIRE(r.certificate);
    const Multigraph planar = planarize(g, *r.certificate);
    CHECK(is_planar(planar));
    CHECK(planar.vertex_count() == g.vertex_count() + r.certificate->k);
    CHECK(planar.edge_count() == g.edge_count() + 2 * r.certificate->k);
    for (const CrossingPair& p : r.certificate->witness) {
      const Edge& a = g.edge(p.first);
      const Edge& b = g.edge(p.second);
      CHECK_FALSE(a.touches(b.u));
      CHECK_FALSE(a.touches(b.v));
    }
  }
}

TEST_CASE("planarize rejects malformed certificates") {
  const Multigraph k33 = complete_bipartite(3, 3);
  CrossingCertificate adjacent_pair{1, {{0, 1}}, {}, 0};
  CHECK_THROWS_AS(planarize(k33, adjacent_pair), GraphError);
  CrossingCertificate missing_order{2, {{0, 4}, {0, 8}}, {}, 1};
  CHECK_THROWS_AS(planarize(k33, missing_order), GraphError);
}

TEST_CASE("value is independent of the thread count") {
  for (const Multigraph& g : {complete_bipartite(3, 5), complete_graph(6), build_r({3, 0})}) {
    OracleOptions one, many;
    one.threads = 1;
    many.threads = 4;
    const OracleResult a = crossing_number_exact(g, one);
    const OracleResult b = crossing_number_exact(g, many);
    REQUIRE(a.certificate);
    REQUIRE(b.certificate);
    CHECK(a.certificate->k == b.certificate->k);
    CHECK(a.certificate->witness.size() == b.certificate->witness.size());
    for (std::size_t i = 0; i < a.certificate->witness.size(); ++i) {
      CHECK(a.certificate->witness[i].first == b.certificate->witness[i].first);
      CHECK(a.certificate->witness[i].second == b.certificate->witness[i].second);
    }
  }
}

TEST_CASE("monotone under edge deletion") {
  for (const Multigraph& g : {complete_graph(6), complete_bipartite(3, 4), petersen()}) {
    const std::size_t k = exact(g);
    for (EdgeId e = 0; e < g.edge_count(); e += 3) CHECK(exact(delete_edge(g, e)) <= k);
  }
}

TEST_CASE("max_k and budget") {
  OracleOptions low;
  low.max_k = 2;
  const OracleResult above = crossing_number_exact(complete_graph(6), low);
  CHECK(above.status == OracleResult::Status::kAboveMaxK);
  CHECK(above.highest_exhausted == 2);
  CHECK_FALSE(above.certificate);

  OracleOptions tiny;
  tiny.budget = std::chrono::milliseconds(0);
  tiny.triangle_free_bound = false;
  const OracleResult out = crossing_number_exact(complete_bipartite(3, 5), tiny);
  CHECK(out.status == OracleResult::Status::kBudgetExceeded);
  CHECK(out.highest_exhausted < 3);
}

TEST_CASE("multigraphs are rejected") {
  Multigraph g(2);
  g.add_edge(VertexId{0}, VertexId{1});
  g.add_edge(VertexId{0}, VertexId{1});
  CHECK_THROWS_AS(crossing_number_exact(g), GraphError);
}

TEST_CASE("edge criticality") {
  const CriticalityReport k33 = is_edge_critical(complete_bipartite(3, 3), 1);
  CHECK(k33.verdict == CriticalityReport::Verdict::kCritical);
  CHECK(k33.edges.size() == 9);
  for (const EdgeCriticality& e : k33.edges) CHECK(e.reduced_value == std::size_t{0});

  const CriticalityReport k35 = is_edge_critical(complete_bipartite(3, 5), 4);
  CHECK(k35.verdict == CriticalityReport::Verdict::kCritical);
  CHECK(k35.edges.size() == 15);

  // K4 with a pendant path has crossing number 0: vacuously not critical
  Multigraph k4 = complete_graph(4);
  const VertexId extra = k4.add_vertex();
  k4.add_edge(VertexId{0}, extra);
  CHECK(is_edge_critical(k4, 0).verdict == CriticalityReport::Verdict::kNotCritical);

  // K6 plus a pendant edge keeps crossing number 3 after deleting the pendant edge
  Multigraph k6 = complete_graph(6);
  const VertexId tail = k6.add_vertex();
  k6.add_edge(VertexId{0}, tail);
  CHECK(is_edge_critical(k6, 3).verdict == CriticalityReport::Verdict::kNotCritical);
}
