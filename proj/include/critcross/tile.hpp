#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "critcross/multigraph.hpp"

namespace critcross {

enum class TileShape : std::uint8_t {
  kStaircase,
  kStaircaseInverted,
  kStaircaseTwisted,
  kHTile,
  kHTileTwisted,
};

struct TileKind {
  TileShape shape;
  int parameter;  // n for staircase shapes, w for H shapes

  static TileKind staircase(int n) { return {TileShape::kStaircase, n}; }
  static TileKind staircase_inverted(int n) { return {TileShape::kStaircaseInverted, n}; }
  static TileKind staircase_twisted(int n) { return {TileShape::kStaircaseTwisted, n}; }
  static TileKind h_tile(int w) { return {TileShape::kHTile, w}; }
  static TileKind h_tile_twisted(int w) { return {TileShape::kHTileTwisted, w}; }
};

/// A graph with two disjoint ordered walls. Thick edges carry EdgeLabel::kThick.
///
/// Every tile built here has palindromic wall degree profiles: inside the tile, wall
/// position i and position L-1-i of the same wall have equal degree. The census of a
/// join therefore does not depend on inversions or twists.
struct Tile {
  Multigraph graph;
  std::vector<VertexId> left_wall;
  std::vector<VertexId> right_wall;
  /// Traversing paths (left wall to right wall) as edge sequences; H tiles only.
  std::map<std::string, std::vector<EdgeId>> path_labels;

  std::vector<EdgeId> thick_edges() const { return graph.edges_with_label(EdgeLabel::kThick); }
};

/// Wall length of the staircase tile S_n and of the H tile H_w.
std::size_t staircase_wall_size(int n);
std::size_t h_tile_wall_size(int w);

Tile make_tile(TileKind kind);

/// Reflection across the horizontal axis: both walls reversed.
Tile invert(const Tile& t);
/// Reverses the right wall only.
Tile twist(const Tile& t);

/// Throws GraphError when a tile breaks the wall invariants.
void validate_tile(const Tile& t);

/// Planarity of the tile drawn in a disc with the left wall and then the right wall
/// (reversed) appearing in order around the boundary.
bool is_planar_tile(const Tile& t);

/// Identifies right wall i with left wall i+1 position-wise, and the last right wall
/// with the first left wall. Vertex ids follow tile order; labels are preserved.
Multigraph join_cyclic(std::span<const Tile> tiles);

/// Contracts thick edges of a joined graph. Each selected edge must be thick, join two
/// degree-3 vertices, and the selection must create no parallel edge.
Multigraph contract_thick(const Multigraph& g, std::span<const EdgeId> selection);

/// First `count` thick edges in ascending edge order.
std::vector<EdgeId> canonical_thick_selection(const Multigraph& g, std::size_t count);
/// `count` thick edges drawn uniformly with a seeded generator; sorted ascending.
std::vector<EdgeId> random_thick_selection(const Multigraph& g, std::size_t count, std::uint64_t seed);

}  // namespace critcross
