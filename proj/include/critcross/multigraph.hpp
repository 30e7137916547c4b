#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "critcross/census.hpp"

namespace critcross {

enum class VertexId : std::uint32_t {};
using EdgeId = std::size_t;

constexpr std::uint32_t raw(VertexId v) { return static_cast<std::uint32_t>(v); }

enum class EdgeLabel : std::uint8_t { kPlain, kThick };

struct Edge {
  VertexId u;
  VertexId v;
  EdgeLabel label = EdgeLabel::kPlain;

  bool touches(VertexId x) const { return u == x || v == x; }
  VertexId other(VertexId x) const { return u == x ? v : u; }
};

/// A contraction merged `first` and `second` into `merged`.
struct MergeRecord {
  VertexId merged;
  VertexId first;
  VertexId second;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Loopless multigraph with stable vertex ids. Vertices are kept sorted by id;
/// EdgeId is the position in edges().
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t vertex_count);

  VertexId add_vertex();
  EdgeId add_edge(VertexId u, VertexId v, EdgeLabel label = EdgeLabel::kPlain);

  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const;
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(VertexId v) const;
  /// Position of `v` in vertices(); throws for unknown ids.
  std::size_t index_of(VertexId v) const;
  /// Degrees aligned with vertices().
  std::vector<std::size_t> degrees() const;
  std::size_t degree(VertexId v) const;
  /// Neighbor list with multiplicity, in edge order.
  std::vector<VertexId> neighbors(VertexId v) const;
  /// Adjacency as dense indices (positions in vertices()), with multiplicity.
  std::vector<std::vector<std::size_t>> dense_adjacency() const;

  bool is_simple() const;
  /// |E| minus the number of distinct endpoint pairs.
  std::size_t parallel_excess() const;
  std::vector<EdgeId> edges_with_label(EdgeLabel label) const;

  const std::vector<MergeRecord>& merges() const { return merges_; }
  VertexId next_id() const { return VertexId{next_id_}; }

 private:
  friend Multigraph delete_edge(const Multigraph&, EdgeId);
  friend Multigraph contract_edges(const Multigraph&, std::span<const EdgeId>);
  friend Multigraph zip_product(const Multigraph&, VertexId, const Multigraph&, VertexId,
                                std::span<const std::pair<VertexId, VertexId>>);

  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::uint32_t next_id_ = 0;
  std::vector<MergeRecord> merges_;
};

/// K_{a,b}: ids 0..a-1 form the first class, a..a+b-1 the second.
Multigraph complete_bipartite(std::size_t a, std::size_t b);
Multigraph complete_graph(std::size_t n);
Multigraph cycle_graph(std::size_t n);

/// Throws GraphError naming the offending vertices if any degree is outside 3..6.
DegreeCensus3456 degree_census(const Multigraph& g);

Multigraph delete_edge(const Multigraph& g, EdgeId e);
/// Removes the lowest-id edge instance joining u and v.
Multigraph delete_edge(const Multigraph& g, VertexId u, VertexId v);
Multigraph contract_edge(const Multigraph& g, EdgeId e);
/// Contracts a set of edges forming a matching, in ascending edge-id order.
/// Each contraction gets a fresh id; an edge that would become a loop is rejected.
Multigraph contract_edges(const Multigraph& g, std::span<const EdgeId> selection);

/// Neighbors of v1 sorted by id matched in order with neighbors of v2 sorted by id.
std::vector<std::pair<VertexId, VertexId>> canonical_zip_matching(const Multigraph& g1, VertexId v1,
                                                                  const Multigraph& g2, VertexId v2);
/// Deletes v1 and v2 and joins their neighborhoods by `matching`
/// (pairs of (neighbor of v1 in g1, neighbor of v2 in g2)). Vertices of g1 keep
/// their ids; those of g2 are shifted by g1.next_id(). An empty matching selects
/// canonical_zip_matching.
Multigraph zip_product(const Multigraph& g1, VertexId v1, const Multigraph& g2, VertexId v2,
                       std::span<const std::pair<VertexId, VertexId>> matching = {});
/// Lowest-id vertex of degree 3, if any.
std::optional<VertexId> lowest_degree3_vertex(const Multigraph& g);

/// Edge-list text: "# vertices=N edges=M" then one "u v" line per edge. Vertex ids
/// are renumbered densely in ascending id order.
void write_edge_list(const Multigraph& g, std::ostream& os);
Multigraph read_edge_list(std::istream& is);
/// DOT export; thick edges are drawn bold.
void write_dot(const Multigraph& g, std::ostream& os);

}  // namespace critcross
