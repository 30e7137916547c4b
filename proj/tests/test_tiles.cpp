#include <doctest.h>

#include <set>

#include "critcross/families.hpp"
#include "critcross/planarity.hpp"
#include "critcross/tile.hpp"

using namespace critcross;

namespace {

std::vector<TileShape> all_shapes() {
  return {TileShape::kStaircase, TileShape::kStaircaseInverted, TileShape::kStaircaseTwisted, TileShape::kHTile,
          TileShape::kHTileTwisted};
}

bool is_staircase(TileShape s) { return s <= TileShape::kStaircaseTwisted; }

/// Walks `path` and checks it runs from the left wall to the right wall.
bool traverses(const Tile& t, const std::vector<EdgeId>& path) {
  if (path.empty()) return false;
  const std::set<VertexId> left(t.left_wall.begin(), t.left_wall.end());
  const std::set<VertexId> right(t.right_wall.begin(), t.right_wall.end());
  const Edge& first = t.graph.edge(path.front());
  for (VertexId start : {first.u, first.v}) {
    if (!left.count(start)) continue;
    VertexId at = start;
    bool ok = true;
    std::set<VertexId> visited{at};
    for (EdgeId e : path) {
      const Edge& edge = t.graph.edge(e);
      if (!edge.touches(at)) {
        ok = false;
        break;
      }
      at = edge.other(at);
      if (!visited.insert(at).second) {
        ok = false;
        break;
      }
    }
    if (ok && right.count(at)) return true;
  }
  return false;
}

std::vector<std::size_t> wall_degrees(const Tile& t, const std::vector<VertexId>& wall) {
  std::vector<std::size_t> out;
  for (VertexId v : wall) out.push_back(t.graph.degree(v));
  return out;
}

}  // namespace

TEST_CASE("wall sizes") {
  for (int n = 3; n <= 8; ++n) {
    const Tile t = make_tile(TileKind::staircase(n));
    CHECK(t.left_wall.size() == staircase_wall_size(n));
    CHECK(t.right_wall.size() == staircase_wall_size(n));
  }
  for (int w = 0; w <= 4; ++w) {
    const Tile t = make_tile(TileKind::h_tile(w));
    CHECK(t.left_wall.size() == 4 * static_cast<std::size_t>(w) + 5);
    CHECK(t.right_wall.size() == t.left_wall.size());
  }
  CHECK_THROWS_AS(make_tile(TileKind::staircase(2)), GraphError);
  CHECK_THROWS_AS(make_tile(TileKind::h_tile(-1)), GraphError);
}

TEST_CASE("every tile is valid, simple and planar in its disc") {
  for (TileShape shape : all_shapes()) {
    for (int p = 0; p <= 6; ++p) {
      const int param = is_staircase(shape) ? p + 3 : p;
      const Tile t = make_tile({shape, param});
      CHECK_NOTHROW(validate_tile(t));
      CHECK(t.graph.is_simple());
      CHECK(is_planar(t.graph));
      if (shape == TileShape::kStaircase || shape == TileShape::kHTile) CHECK(is_planar_tile(t));
    }
  }
}

TEST_CASE("staircase tile: thick edges and degrees") {
  for (int n = 3; n <= 8; ++n) {
    const Tile t = make_tile(TileKind::staircase(n));
    CHECK(t.thick_edges().size() == 2 * static_cast<std::size_t>(n - 3));
    for (std::size_t d : wall_degrees(t, t.left_wall)) CHECK(d == 2);
    for (std::size_t d : wall_degrees(t, t.right_wall)) CHECK(d == 1);
  }
}

TEST_CASE("thick edges join degree-3 vertices once tiles are joined") {
  for (int n = 3; n <= 8; ++n) {
    const Multigraph g = build_s({n, 5, 0});
    for (EdgeId e : g.edges_with_label(EdgeLabel::kThick)) {
      CHECK(g.degree(g.edge(e).u) == 3);
      CHECK(g.degree(g.edge(e).v) == 3);
    }
  }
}

TEST_CASE("H tile: labelled traversing paths") {
  for (int w = 0; w <= 4; ++w) {
    const Tile t = make_tile(TileKind::h_tile(w));
    CHECK(t.path_labels.size() == 8 * static_cast<std::size_t>(w) + 11);
    for (const auto& [name, path] : t.path_labels) {
      INFO("path " << name);
      CHECK(traverses(t, path));
    }
    CHECK(t.thick_edges().empty());
  }
}

TEST_CASE("wall degree profiles are palindromic") {
  for (TileShape shape : {TileShape::kStaircase, TileShape::kHTile}) {
    for (int p = 0; p <= 5; ++p) {
      const Tile t = make_tile({shape, is_staircase(shape) ? p + 3 : p});
      for (const auto* wall : {&t.left_wall, &t.right_wall}) {
        const auto d = wall_degrees(t, *wall);
        CHECK(std::equal(d.begin(), d.end(), d.rbegin()));
      }
    }
  }
}

TEST_CASE("invert and twist are involutions") {
  for (TileKind kind : {TileKind::staircase(5), TileKind::h_tile(1)}) {
    const Tile t = make_tile(kind);
    CHECK(invert(invert(t)).left_wall == t.left_wall);
    CHECK(invert(invert(t)).right_wall == t.right_wall);
    CHECK(twist(twist(t)).right_wall == t.right_wall);
    CHECK(twist(t).left_wall == t.left_wall);
    CHECK(twist(t).right_wall != t.right_wall);
    CHECK(invert(t).left_wall != t.left_wall);
  }
}

TEST_CASE("join identifies walls") {
  const Tile t = make_tile(TileKind::staircase(4));
  const std::vector<Tile> tiles(3, t);
  const Multigraph g = join_cyclic(tiles);
  CHECK(g.vertex_count() == 3 * (t.graph.vertex_count() - t.left_wall.size()));
  CHECK(g.edge_count() == 3 * t.graph.edge_count());
  CHECK(g.edges_with_label(EdgeLabel::kThick).size() == 3 * t.thick_edges().size());

  const std::vector<Tile> mismatched{make_tile(TileKind::staircase(4)), make_tile(TileKind::staircase(5))};
  CHECK_THROWS_AS(join_cyclic(mismatched), GraphError);
  CHECK_THROWS_AS(join_cyclic(std::span<const Tile>{}), GraphError);
}

TEST_CASE("staircase joins match the census for n 3..8 and lengths up to 19") {
  for (int n = 3; n <= 8; ++n) {
    for (std::uint64_t m = 3; m <= 19; m += 2) {
      const SParams p{n, m, 0};
      const Multigraph g = build_s(p);
      CHECK(degree_census(g) == census_s(p));
      CHECK(g.edges_with_label(EdgeLabel::kThick).size() == 2 * m * static_cast<std::uint64_t>(n - 3));
    }
  }
}

TEST_CASE("thick contraction: every count up to the maximum") {
  for (int n = 4; n <= 6; ++n) {
    const std::uint64_t m = 5;
    const std::uint64_t max_c = 2 * m * static_cast<std::uint64_t>(n - 3);
    for (std::uint64_t c = 0; c <= max_c; ++c) {
      const SParams p{n, m, c};
      CHECK(degree_census(build_s(p)) == census_s(p));
    }
  }
}

TEST_CASE("H joins match the census for w 0..4 and lengths 3..20") {
  for (int w = 0; w <= 4; ++w) {
    CHECK_THROWS_AS(build_h({w, 2}), GraphError);  // two twisted tiles alone double some edges
    for (std::uint64_t s = 3; s <= 20; ++s) {
      const HParams p{w, s};
      const Multigraph g = build_h(p);
      CHECK(g.is_simple());
      CHECK(degree_census(g) == census_h(p));
    }
  }
}

TEST_CASE("census does not depend on the twist position") {
  const SParams p{5, 11, 7};
  const DegreeCensus3456 expected = census_s(p);
  for (std::uint64_t pos = 1; pos <= 11; pos += 2) {
    BuildOptions options;
    options.twist_position = pos;
    CHECK(degree_census(build_s(p, options)) == expected);
  }
  BuildOptions even;
  even.twist_position = 4;
  CHECK_THROWS_AS(build_s(p, even), GraphError);
}

TEST_CASE("sequence shapes") {
  const auto s = s_tile_sequence(4, 7, 3);
  REQUIRE(s.size() == 7);
  CHECK(s[2].shape == TileShape::kStaircaseTwisted);
  CHECK(s[0].shape == TileShape::kStaircase);
  CHECK(s[1].shape == TileShape::kStaircaseInverted);
  CHECK(s[3].shape == TileShape::kStaircase);
  CHECK(s[4].shape == TileShape::kStaircaseInverted);
  CHECK(default_twist_position(1) == 1);
  CHECK(default_twist_position(9) == 5);
  CHECK(default_twist_position(11) == 5);
  const auto h = h_tile_sequence(1, 5);
  CHECK(h[2].shape == TileShape::kHTile);
  CHECK(h[3].shape == TileShape::kHTileTwisted);
  CHECK(h[4].shape == TileShape::kHTileTwisted);
  CHECK_THROWS_AS(h_tile_sequence(1, 1), GraphError);
}

TEST_CASE("seeded thick selection is reproducible") {
  const Multigraph joined = build_s({5, 7, 0});
  const auto a = random_thick_selection(joined, 9, 42);
  const auto b = random_thick_selection(joined, 9, 42);
  CHECK(a == b);
  CHECK(std::is_sorted(a.begin(), a.end()));
  bool differs = false;
  for (std::uint64_t seed = 0; seed < 20 && !differs; ++seed) differs = random_thick_selection(joined, 9, seed) != a;
  CHECK(differs);
  CHECK_THROWS_AS(random_thick_selection(joined, 1000, 1), GraphError);

  BuildOptions options;
  options.selection = ThickSelection::seeded(7);
  const SParams p{5, 7, 9};
  CHECK(degree_census(build_s(p, options)) == census_s(p));
}

TEST_CASE("contract_thick rejects plain edges") {
  const Multigraph g = build_s({4, 3, 0});
  const auto plain = g.edges_with_label(EdgeLabel::kPlain);
  const EdgeId sel[] = {plain.front()};
  CHECK_THROWS_AS(contract_thick(g, sel), GraphError);
}
