#include "critcross/multigraph.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

namespace critcross {

namespace {

constexpr std::uint32_t kUnmapped = std::numeric_limits<std::uint32_t>::max();

std::pair<std::uint32_t, std::uint32_t> ordered(const Edge& e) {
  return std::minmax(raw(e.u), raw(e.v));
}

}  // namespace

Multigraph::Multigraph(std::size_t vertex_count) {
  vertices_.reserve(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) add_vertex();
}

VertexId Multigraph::add_vertex() {
  if (next_id_ == kUnmapped) throw GraphError("vertex id space exhausted");
  const VertexId id{next_id_++};
  vertices_.push_back(id);
  return id;
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v, EdgeLabel label) {
  if (u == v) throw GraphError("loop at vertex " + std::to_string(raw(u)));
  if (!has_vertex(u) || !has_vertex(v)) throw GraphError("edge endpoint is not a vertex");
  edges_.push_back({u, v, label});
  return edges_.size() - 1;
}

const Edge& Multigraph::edge(EdgeId e) const {
  if (e >= edges_.size()) throw GraphError("no edge with id " + std::to_string(e));
  return edges_[e];
}

bool Multigraph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t Multigraph::index_of(VertexId v) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw GraphError("unknown vertex " + std::to_string(raw(v)));
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<std::size_t> Multigraph::degrees() const {
  std::vector<std::size_t> deg(vertices_.size(), 0);
  for (const Edge& e : edges_) {
    ++deg[index_of(e.u)];
    ++deg[index_of(e.v)];
  }
  return deg;
}

std::size_t Multigraph::degree(VertexId v) const {
  index_of(v);
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.touches(v); }));
}

std::vector<VertexId> Multigraph::neighbors(VertexId v) const {
  index_of(v);
  std::vector<VertexId> out;
  for (const Edge& e : edges_) {
    if (e.touches(v)) out.push_back(e.other(v));
  }
  return out;
}

std::vector<std::vector<std::size_t>> Multigraph::dense_adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices_.size());
  for (const Edge& e : edges_) {
    const std::size_t a = index_of(e.u);
    const std::size_t b = index_of(e.v);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::size_t Multigraph::parallel_excess() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> keys;
  keys.reserve(edges_.size());
  for (const Edge& e : edges_) keys.push_back(ordered(e));
  std::sort(keys.begin(), keys.end());
  const auto distinct = static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
  return edges_.size() - distinct;
}

bool Multigraph::is_simple() const { return parallel_excess() == 0; }

std::vector<EdgeId> Multigraph::edges_with_label(EdgeLabel label) const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (edges_[e].label == label) out.push_back(e);
  }
  return out;
}

Multigraph complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw GraphError("complete_bipartite: part sizes must be positive");
  Multigraph g(a + b);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      g.add_edge(VertexId{static_cast<std::uint32_t>(i)}, VertexId{static_cast<std::uint32_t>(a + j)});
    }
  }
  return g;
}

Multigraph complete_graph(std::size_t n) {
  Multigraph g(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) g.add_edge(VertexId{i}, VertexId{j});
  }
  return g;
}

Multigraph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle_graph: need at least 3 vertices");
  Multigraph g(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    g.add_edge(VertexId{i}, VertexId{static_cast<std::uint32_t>((i + 1) % n)});
  }
  return g;
}

DegreeCensus3456 degree_census(const Multigraph& g) {
  const auto deg = g.degrees();
  std::size_t counts[4] = {0, 0, 0, 0};
  std::vector<std::string> offenders;
  std::size_t offending = 0;
  for (std::size_t i = 0; i < deg.size(); ++i) {
    if (deg[i] < 3 || deg[i] > 6) {
      if (offenders.size() < 10) {
        offenders.push_back(std::to_string(raw(g.vertices()[i])) + " (degree " +
                            std::to_string(deg[i]) + ")");
      }
      ++offending;
      continue;
    }
    ++counts[deg[i] - 3];
  }
  if (offending > 0) {
    std::string msg = "degree outside 3..6 at " + std::to_string(offending) + " vertices:";
    for (const auto& o : offenders) msg += " " + o;
    if (offending > offenders.size()) msg += " ...";
    throw GraphError(msg);
  }
  return {counts[0], counts[1], counts[2], counts[3]};
}

Multigraph delete_edge(const Multigraph& g, EdgeId e) {
  g.edge(e);
  Multigraph out = g;
  out.edges_.erase(out.edges_.begin() + static_cast<std::ptrdiff_t>(e));
  return out;
}

Multigraph delete_edge(const Multigraph& g, VertexId u, VertexId v) {
  const auto edges = g.edges();
  for (EdgeId e = 0; e < edges.size(); ++e) {
    if ((edges[e].u == u && edges[e].v == v) || (edges[e].u == v && edges[e].v == u)) {
      return delete_edge(g, e);
    }
  }
  throw GraphError("no edge " + std::to_string(raw(u)) + "-" + std::to_string(raw(v)));
}

Multigraph contract_edge(const Multigraph& g, EdgeId e) {
  const EdgeId selection[] = {e};
  return contract_edges(g, selection);
}

Multigraph contract_edges(const Multigraph& g, std::span<const EdgeId> selection) {
  std::vector<EdgeId> order(selection.begin(), selection.end());
  std::sort(order.begin(), order.end());
  if (std::adjacent_find(order.begin(), order.end()) != order.end()) {
    throw GraphError("contract: duplicate edge in selection");
  }
  std::vector<std::uint32_t> target(g.next_id_, kUnmapped);
  std::vector<char> contracted(g.edges_.size(), 0);
  Multigraph out;
  out.next_id_ = g.next_id_;
  out.merges_ = g.merges_;
  std::vector<VertexId> fresh;
  for (EdgeId e : order) {
    const Edge& edge = g.edge(e);
    if (target[raw(edge.u)] != kUnmapped || target[raw(edge.v)] != kUnmapped) {
      throw GraphError("contract: selected edges must form a matching");
    }
    if (out.next_id_ == kUnmapped) throw GraphError("vertex id space exhausted");
    const VertexId merged{out.next_id_++};
    target[raw(edge.u)] = raw(merged);
    target[raw(edge.v)] = raw(merged);
    contracted[e] = 1;
    fresh.push_back(merged);
    out.merges_.push_back({merged, edge.u, edge.v});
  }
  for (VertexId v : g.vertices_) {
    if (target[raw(v)] == kUnmapped) out.vertices_.push_back(v);
  }
  out.vertices_.insert(out.vertices_.end(), fresh.begin(), fresh.end());
  auto map = [&](VertexId v) { return target[raw(v)] == kUnmapped ? v : VertexId{target[raw(v)]}; };
  out.edges_.reserve(g.edges_.size() - order.size());
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    if (contracted[e]) continue;
    const Edge& edge = g.edges_[e];
    Edge mapped{map(edge.u), map(edge.v), edge.label};
    if (mapped.u == mapped.v) {
      throw GraphError("contract: edge " + std::to_string(e) + " would become a loop");
    }
    out.edges_.push_back(mapped);
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> canonical_zip_matching(const Multigraph& g1, VertexId v1,
                                                                  const Multigraph& g2, VertexId v2) {
  auto n1 = g1.neighbors(v1);
  auto n2 = g2.neighbors(v2);
  if (n1.size() != n2.size()) throw GraphError("zip: degree mismatch");
  std::sort(n1.begin(), n1.end());
  std::sort(n2.begin(), n2.end());
  std::vector<std::pair<VertexId, VertexId>> matching;
  for (std::size_t i = 0; i < n1.size(); ++i) matching.emplace_back(n1[i], n2[i]);
  return matching;
}

namespace {

std::vector<VertexId> zip_neighbors(const Multigraph& g, VertexId v, const char* which) {
  auto nbrs = g.neighbors(v);
  std::sort(nbrs.begin(), nbrs.end());
  if (nbrs.size() != 3) {
    throw GraphError(std::string("zip: ") + which + " vertex must have degree 3, has " +
                     std::to_string(nbrs.size()));
  }
  if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
    throw GraphError(std::string("zip: ") + which + " vertex needs three distinct neighbors");
  }
  return nbrs;
}

}  // namespace

Multigraph zip_product(const Multigraph& g1, VertexId v1, const Multigraph& g2, VertexId v2,
                       std::span<const std::pair<VertexId, VertexId>> matching) {
  const auto n1 = zip_neighbors(g1, v1, "first");
  const auto n2 = zip_neighbors(g2, v2, "second");
  std::vector<std::pair<VertexId, VertexId>> pairs(matching.begin(), matching.end());
  if (pairs.empty()) pairs = canonical_zip_matching(g1, v1, g2, v2);
  {
    std::vector<VertexId> lhs, rhs;
    for (const auto& [a, b] : pairs) {
      lhs.push_back(a);
      rhs.push_back(b);
    }
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != n1 || rhs != n2) throw GraphError("zip: matching is not a bijection between the neighborhoods");
  }
  const std::uint64_t offset = g1.next_id_;
  if (offset + g2.next_id_ >= kUnmapped) throw GraphError("vertex id space exhausted");
  auto shift = [offset](VertexId v) { return VertexId{static_cast<std::uint32_t>(raw(v) + offset)}; };

  Multigraph out;
  out.next_id_ = static_cast<std::uint32_t>(offset + g2.next_id_);
  out.vertices_.reserve(g1.vertices_.size() + g2.vertices_.size() - 2);
  for (VertexId v : g1.vertices_) {
    if (v != v1) out.vertices_.push_back(v);
  }
  for (VertexId v : g2.vertices_) {
    if (v != v2) out.vertices_.push_back(shift(v));
  }
  out.edges_.reserve(g1.edges_.size() + g2.edges_.size() - 3);
  for (const Edge& e : g1.edges_) {
    if (!e.touches(v1)) out.edges_.push_back(e);
  }
  for (const Edge& e : g2.edges_) {
    if (!e.touches(v2)) out.edges_.push_back({shift(e.u), shift(e.v), e.label});
  }
  for (const auto& [a, b] : pairs) out.edges_.push_back({a, shift(b), EdgeLabel::kPlain});
  out.merges_ = g1.merges_;
  for (const MergeRecord& m : g2.merges_) out.merges_.push_back({shift(m.merged), shift(m.first), shift(m.second)});
  return out;
}

std::optional<VertexId> lowest_degree3_vertex(const Multigraph& g) {
  const auto deg = g.degrees();
  for (std::size_t i = 0; i < deg.size(); ++i) {
    if (deg[i] == 3) return g.vertices()[i];
  }
  return std::nullopt;
}

void write_edge_list(const Multigraph& g, std::ostream& os) {
  os << "# vertices=" << g.vertex_count() << " edges=" << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << g.index_of(e.u) << ' ' << g.index_of(e.v) << '\n';
}

Multigraph read_edge_list(std::istream& is) {
  std::optional<std::size_t> declared_vertices;
  std::optional<std::size_t> declared_edges;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.front() == '#') {
      std::size_t nv = 0, ne = 0;
      if (std::sscanf(line.c_str(), "# vertices=%zu edges=%zu", &nv, &ne) == 2) {
        declared_vertices = nv;
        declared_edges = ne;
      }
      continue;
    }
    std::istringstream fields(line);
    long long u = -1, v = -1;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest) || u < 0 || v < 0) {
      throw GraphError("edge list line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    pairs.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  std::size_t n = declared_vertices.value_or(0);
  if (!declared_vertices) {
    for (const auto& [u, v] : pairs) n = std::max({n, u + 1, v + 1});
  }
  if (declared_edges && *declared_edges != pairs.size()) {
    throw GraphError("edge list declares " + std::to_string(*declared_edges) + " edges but has " +
                     std::to_string(pairs.size()));
  }
  Multigraph g(n);
  for (const auto& [u, v] : pairs) {
    if (u >= n || v >= n) throw GraphError("edge list vertex id out of range");
    g.add_edge(VertexId{static_cast<std::uint32_t>(u)}, VertexId{static_cast<std::uint32_t>(v)});
  }
  return g;
}

void write_dot(const Multigraph& g, std::ostream& os) {
  os << "graph G {\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) os << "  " << i << ";\n";
  for (const Edge& e : g.edges()) {
    os << "  " << g.index_of(e.u) << " -- " << g.index_of(e.v);
    if (e.label == EdgeLabel::kThick) os << " [style=bold, penwidth=3]";
    os << ";\n";
  }
  os << "}\n";
}

}  // namespace critcross
