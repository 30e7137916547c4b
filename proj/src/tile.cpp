#include "critcross/tile.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "critcross/planarity.hpp"

namespace critcross {

namespace {

VertexId vid(std::size_t i) { return VertexId{static_cast<std::uint32_t>(i)}; }

/// S_n as n rows (traversing paths) joined by rungs between consecutive rows.
/// Rungs between rows r and r+1 sit at horizontal positions r and r+n for
/// r <= n-3, so the rungs climb like a staircase; the last pair of rows shares one
/// rung, whose upper end is the tile's only degree-4 vertex. On each middle row the
/// rung ends alternate up/down/up/down and the two up-down row edges are thick.
Tile staircase_tile(int n) {
  const int stride = n;
  std::vector<std::vector<int>> rung_positions(static_cast<std::size_t>(n - 1));
  for (int r = 0; r <= n - 3; ++r) rung_positions[static_cast<std::size_t>(r)] = {r, r + stride};
  rung_positions[static_cast<std::size_t>(n - 2)] = {n - 3 + stride};

  std::vector<std::vector<int>> row_positions(static_cast<std::size_t>(n));
  for (int r = 0; r + 1 < n; ++r) {
    for (int x : rung_positions[static_cast<std::size_t>(r)]) {
      row_positions[static_cast<std::size_t>(r)].push_back(x);
      row_positions[static_cast<std::size_t>(r + 1)].push_back(x);
    }
  }
  for (auto& row : row_positions) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }

  Tile t;
  // ids: left wall (one per row), then internal row vertices, then right wall
  std::vector<std::vector<VertexId>> row_vertices(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    const VertexId v = t.graph.add_vertex();
    t.left_wall.push_back(v);
    row_vertices[static_cast<std::size_t>(r)].push_back(v);
  }
  for (int r = 0; r < n; ++r) {
    auto& row = row_vertices[static_cast<std::size_t>(r)];
    for (std::size_t j = 1; j < row_positions[static_cast<std::size_t>(r)].size(); ++j) {
      row.push_back(t.graph.add_vertex());
    }
  }
  for (int r = 0; r < n; ++r) t.right_wall.push_back(t.graph.add_vertex());

  auto at = [&](int r, int x) {
    const auto& pos = row_positions[static_cast<std::size_t>(r)];
    const auto j = static_cast<std::size_t>(std::find(pos.begin(), pos.end(), x) - pos.begin());
    return row_vertices[static_cast<std::size_t>(r)][j];
  };

  for (int r = 0; r < n; ++r) {
    const auto& row = row_vertices[static_cast<std::size_t>(r)];
    const bool middle = r >= 1 && r <= n - 3;
    for (std::size_t j = 0; j + 1 < row.size(); ++j) {
      const bool thick = middle && (j == 0 || j == 2);
      t.graph.add_edge(row[j], row[j + 1], thick ? EdgeLabel::kThick : EdgeLabel::kPlain);
    }
    t.graph.add_edge(row.back(), t.right_wall[static_cast<std::size_t>(r)]);
  }
  for (int r = 0; r + 1 < n; ++r) {
    for (int x : rung_positions[static_cast<std::size_t>(r)]) t.graph.add_edge(at(r, x), at(r + 1, x));
  }
  return t;
}

/// H_w as a strip of the triangular lattice, 4w+5 rows high and one column wide,
/// plus two degree-3 handles. Diagonals lean one way in the upper half of the strip
/// and the other way in the lower half, which keeps both wall degree profiles
/// palindromic. Each handle subdivides two sides of a corner triangle and joins the
/// subdivision vertices.
Tile h_tile(int w) {
  const std::size_t rows = h_tile_wall_size(w);
  const std::size_t half = rows / 2;  // bands [0, half) lean one way, [half, rows-1) the other
  Tile t;
  for (std::size_t i = 0; i < rows; ++i) t.left_wall.push_back(t.graph.add_vertex());
  for (std::size_t i = 0; i < rows; ++i) t.right_wall.push_back(t.graph.add_vertex());
  const VertexId top_row_mid = t.graph.add_vertex();
  const VertexId top_diag_mid = t.graph.add_vertex();
  const VertexId bottom_row_mid = t.graph.add_vertex();
  const VertexId bottom_diag_mid = t.graph.add_vertex();
  const auto& l = t.left_wall;
  const auto& r = t.right_wall;
  Multigraph& g = t.graph;

  std::vector<std::vector<EdgeId>> row_path(rows), band_path(rows - 1);
  for (std::size_t i = 0; i < rows; ++i) {
    if (i == 1) {
      row_path[i] = {g.add_edge(l[i], top_row_mid), g.add_edge(top_row_mid, r[i])};
    } else if (i == rows - 2) {
      row_path[i] = {g.add_edge(l[i], bottom_row_mid), g.add_edge(bottom_row_mid, r[i])};
    } else {
      row_path[i] = {g.add_edge(l[i], r[i])};
    }
  }
  for (std::size_t i = 0; i + 1 < rows; ++i) g.add_edge(l[i], l[i + 1]);
  for (std::size_t b = 0; b + 1 < rows; ++b) {
    if (b == 0) {
      band_path[b] = {g.add_edge(l[0], top_diag_mid), g.add_edge(top_diag_mid, r[1])};
    } else if (b == rows - 2) {
      band_path[b] = {g.add_edge(l[b + 1], bottom_diag_mid), g.add_edge(bottom_diag_mid, r[b])};
    } else if (b < half) {
      band_path[b] = {g.add_edge(l[b], r[b + 1])};
    } else {
      band_path[b] = {g.add_edge(l[b + 1], r[b])};
    }
  }
  const EdgeId top_handle = g.add_edge(top_diag_mid, top_row_mid);
  const EdgeId bottom_handle = g.add_edge(bottom_diag_mid, bottom_row_mid);

  auto& labels = t.path_labels;
  labels["A"] = row_path[0];
  labels["B"] = band_path[0];
  labels["C"] = {band_path[0][0], top_handle, row_path[1][1]};
  labels["D"] = row_path[1];
  labels["E"] = band_path[1];
  labels["F"] = row_path[rows - 1];
  labels["G"] = {band_path[rows - 2][0], bottom_handle, row_path[rows - 2][1]};
  const std::size_t indices = 2 * static_cast<std::size_t>(w) + 1;
  for (std::size_t i = 1; i <= indices; ++i) {
    const std::string idx = std::to_string(i);
    labels["P_" + idx] = row_path[2 * i];
    labels["Q_" + idx] = row_path[2 * i + 1];
    labels["R_" + idx] = band_path[2 * i];
    labels["S_" + idx] = band_path[2 * i + 1];
  }
  return t;
}

}  // namespace

std::size_t staircase_wall_size(int n) { return static_cast<std::size_t>(n); }
std::size_t h_tile_wall_size(int w) { return 4 * static_cast<std::size_t>(w) + 5; }

Tile make_tile(TileKind kind) {
  switch (kind.shape) {
    case TileShape::kStaircase:
    case TileShape::kStaircaseInverted:
    case TileShape::kStaircaseTwisted: {
      if (kind.parameter < 3) throw GraphError("staircase tile needs n >= 3");
      Tile t = staircase_tile(kind.parameter);
      if (kind.shape == TileShape::kStaircaseInverted) return invert(t);
      if (kind.shape == TileShape::kStaircaseTwisted) return twist(t);
      return t;
    }
    case TileShape::kHTile:
    case TileShape::kHTileTwisted: {
      if (kind.parameter < 0) throw GraphError("H tile needs w >= 0");
      Tile t = h_tile(kind.parameter);
      return kind.shape == TileShape::kHTileTwisted ? twist(t) : t;
    }
  }
  throw GraphError("unknown tile shape");
}

Tile invert(const Tile& t) {
  Tile out = t;
  std::reverse(out.left_wall.begin(), out.left_wall.end());
  std::reverse(out.right_wall.begin(), out.right_wall.end());
  return out;
}

Tile twist(const Tile& t) {
  Tile out = t;
  std::reverse(out.right_wall.begin(), out.right_wall.end());
  return out;
}

void validate_tile(const Tile& t) {
  std::set<VertexId> seen;
  for (const auto* wall : {&t.left_wall, &t.right_wall}) {
    for (VertexId v : *wall) {
      if (!t.graph.has_vertex(v)) throw GraphError("tile wall vertex " + std::to_string(raw(v)) + " not in graph");
      if (!seen.insert(v).second) {
        throw GraphError("tile walls repeat vertex " + std::to_string(raw(v)));
      }
    }
  }
}

bool is_planar_tile(const Tile& t) {
  validate_tile(t);
  Multigraph framed = t.graph;
  std::vector<VertexId> boundary(t.left_wall.begin(), t.left_wall.end());
  boundary.insert(boundary.end(), t.right_wall.rbegin(), t.right_wall.rend());
  const VertexId hub = framed.add_vertex();
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    framed.add_edge(hub, boundary[i]);
    if (boundary.size() >= 2) {
      const VertexId next = boundary[(i + 1) % boundary.size()];
      if (next != boundary[i]) framed.add_edge(boundary[i], next);
    }
  }
  return is_planar(framed);
}

Multigraph join_cyclic(std::span<const Tile> tiles) {
  if (tiles.empty()) throw GraphError("join: empty tile sequence");
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    validate_tile(tiles[i]);
    const Tile& next = tiles[(i + 1) % tiles.size()];
    if (tiles[i].right_wall.size() != next.left_wall.size()) {
      throw GraphError("join: wall length mismatch between tile " + std::to_string(i) + " (" +
                       std::to_string(tiles[i].right_wall.size()) + ") and tile " +
                       std::to_string((i + 1) % tiles.size()) + " (" +
                       std::to_string(next.left_wall.size()) + ")");
    }
  }
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::vector<std::uint32_t>> global(tiles.size());
  std::uint32_t next_id = 0;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const Multigraph& g = tiles[i].graph;
    global[i].assign(g.vertex_count(), kUnset);
    std::vector<char> on_left(g.vertex_count(), 0);
    for (VertexId v : tiles[i].left_wall) on_left[g.index_of(v)] = 1;
    for (std::size_t k = 0; k < g.vertex_count(); ++k) {
      if (!on_left[k]) global[i][k] = next_id++;
    }
  }
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const std::size_t prev = (i + tiles.size() - 1) % tiles.size();
    for (std::size_t j = 0; j < tiles[i].left_wall.size(); ++j) {
      const std::size_t from = tiles[prev].graph.index_of(tiles[prev].right_wall[j]);
      global[i][tiles[i].graph.index_of(tiles[i].left_wall[j])] = global[prev][from];
    }
  }
  Multigraph out(next_id);
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const Multigraph& g = tiles[i].graph;
    for (const Edge& e : g.edges()) {
      const VertexId a = vid(global[i][g.index_of(e.u)]);
      const VertexId b = vid(global[i][g.index_of(e.v)]);
      if (a == b) throw GraphError("join: identification creates a loop in tile " + std::to_string(i));
      out.add_edge(a, b, e.label);
    }
  }
  return out;
}

Multigraph contract_thick(const Multigraph& g, std::span<const EdgeId> selection) {
  if (selection.empty()) return g;
  const auto deg = g.degrees();
  for (EdgeId e : selection) {
    const Edge& edge = g.edge(e);
    if (edge.label != EdgeLabel::kThick) throw GraphError("contract_thick: edge " + std::to_string(e) + " is not thick");
    if (deg[g.index_of(edge.u)] != 3 || deg[g.index_of(edge.v)] != 3) {
      throw GraphError("contract_thick: edge " + std::to_string(e) + " does not join two degree-3 vertices");
    }
  }
  Multigraph out = contract_edges(g, selection);
  if (out.parallel_excess() > g.parallel_excess()) {
    throw GraphError("contract_thick: selection creates a parallel edge");
  }
  return out;
}

std::vector<EdgeId> canonical_thick_selection(const Multigraph& g, std::size_t count) {
  auto thick = g.edges_with_label(EdgeLabel::kThick);
  if (count > thick.size()) {
    throw GraphError("requested " + std::to_string(count) + " thick edges, only " +
                     std::to_string(thick.size()) + " exist");
  }
  thick.resize(count);
  return thick;
}

std::vector<EdgeId> random_thick_selection(const Multigraph& g, std::size_t count, std::uint64_t seed) {
  auto thick = g.edges_with_label(EdgeLabel::kThick);
  if (count > thick.size()) {
    throw GraphError("requested " + std::to_string(count) + " thick edges, only " +
                     std::to_string(thick.size()) + " exist");
  }
  // mt19937_64 output is specified exactly; the bounded draw is done by hand so
  // selections do not depend on the standard library's distributions.
  std::mt19937_64 rng(seed);
  auto bounded = [&rng](std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    return x % bound;
  };
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(bounded(thick.size() - i));
    std::swap(thick[i], thick[j]);
  }
  thick.resize(count);
  std::sort(thick.begin(), thick.end());
  return thick;
}

}  // namespace critcross
