#include "critcross/planarity.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>
#include <vector>

namespace critcross {

namespace {

struct Arc {
  std::size_t to;
  std::size_t edge;
};

using Adjacency = std::vector<std::vector<Arc>>;

Adjacency build_adjacency(std::size_t n, std::span<const DenseEdge> edges) {
  Adjacency adj(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].first].push_back({edges[e].second, e});
    adj[edges[e].second].push_back({edges[e].first, e});
  }
  return adj;
}

/// Edge sets of the biconnected components (iterative Tarjan).
std::vector<std::vector<std::size_t>> biconnected_components(std::size_t n, const Adjacency& adj) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kNone), low(n, 0);
  std::vector<std::size_t> edge_stack;
  std::vector<std::vector<std::size_t>> components;
  struct Frame {
    std::size_t v;
    std::size_t parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::size_t timer = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] != kNone || adj[root].empty()) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, kNone, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const std::size_t v = f.v;
      if (f.next < adj[v].size()) {
        const Arc arc = adj[v][f.next++];
        if (arc.edge == f.parent_edge) continue;
        if (disc[arc.to] == kNone) {
          edge_stack.push_back(arc.edge);
          disc[arc.to] = low[arc.to] = timer++;
          stack.push_back({arc.to, arc.edge, 0});
        } else if (disc[arc.to] < disc[v]) {
          edge_stack.push_back(arc.edge);
          low[v] = std::min(low[v], disc[arc.to]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      const std::size_t p = stack.back().v;
      low[p] = std::min(low[p], low[done.v]);
      if (low[done.v] >= disc[p]) {
        std::vector<std::size_t> component;
        while (true) {
          const std::size_t e = edge_stack.back();
          edge_stack.pop_back();
          component.push_back(e);
          if (e == done.parent_edge) break;
        }
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

/// Path addition on a biconnected simple graph with at least three vertices.
class PathAddition {
 public:
  PathAddition(std::size_t n, std::vector<DenseEdge> edges)
      : n_(n), edges_(std::move(edges)), adj_(build_adjacency(n_, edges_)),
        vertex_embedded_(n_, 0), edge_embedded_(edges_.size(), 0) {}

  bool run() {
    embed_initial_cycle();
    std::vector<char> in_face(n_, 0);
    while (embedded_edges_ < edges_.size()) {
      const auto fragments = find_fragments();
      std::size_t chosen = fragments.size();
      std::size_t chosen_face = 0;
      bool forced = false;
      for (std::size_t i = 0; i < fragments.size() && !forced; ++i) {
        std::size_t admissible = 0;
        std::size_t first_face = 0;
        for (std::size_t f = 0; f < faces_.size(); ++f) {
          for (std::size_t v : faces_[f]) in_face[v] = 1;
          const bool ok = std::all_of(fragments[i].attachments.begin(), fragments[i].attachments.end(),
                                      [&](std::size_t a) { return in_face[a] != 0; });
          for (std::size_t v : faces_[f]) in_face[v] = 0;
          if (ok && admissible++ == 0) first_face = f;
        }
        if (admissible == 0) return false;
        if (admissible == 1) {
          chosen = i;
          chosen_face = first_face;
          forced = true;
        } else if (chosen == fragments.size()) {
          chosen = i;
          chosen_face = first_face;
        }
      }
      embed_path(find_path(fragments[chosen]), chosen_face);
    }
    return true;
  }

 private:
  struct Fragment {
    std::vector<std::size_t> attachments;
    std::size_t edge = static_cast<std::size_t>(-1);  // single-edge fragment
    std::size_t seed = static_cast<std::size_t>(-1);  // some interior vertex otherwise
  };

  void mark_edge(std::size_t e) {
    if (!edge_embedded_[e]) {
      edge_embedded_[e] = 1;
      ++embedded_edges_;
    }
  }

  std::size_t edge_between(std::size_t u, std::size_t v) const {
    for (const Arc& a : adj_[u]) {
      if (a.to == v) return a.edge;
    }
    throw std::logic_error("planarity: missing edge on path");
  }

  void embed_initial_cycle() {
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(n_, kNone), depth(n_, kNone);
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
    depth[0] = 0;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == adj_[v].size()) {
        stack.pop_back();
        continue;
      }
      const Arc arc = adj_[v][next++];
      if (depth[arc.to] == kNone) {
        depth[arc.to] = depth[v] + 1;
        parent[arc.to] = v;
        stack.push_back({arc.to, 0});
      } else if (arc.to != parent[v] && depth[arc.to] < depth[v]) {
        std::vector<std::size_t> cycle;
        for (std::size_t x = v; x != arc.to; x = parent[x]) cycle.push_back(x);
        cycle.push_back(arc.to);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          vertex_embedded_[cycle[i]] = 1;
          mark_edge(edge_between(cycle[i], cycle[(i + 1) % cycle.size()]));
        }
        faces_.push_back(cycle);
        faces_.push_back(std::move(cycle));
        return;
      }
    }
    throw std::logic_error("planarity: biconnected component without a cycle");
  }

  std::vector<Fragment> find_fragments() const {
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<Fragment> fragments;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto [u, v] = edges_[e];
      if (!edge_embedded_[e] && vertex_embedded_[u] && vertex_embedded_[v]) {
        Fragment f;
        f.attachments = {std::min(u, v), std::max(u, v)};
        f.edge = e;
        fragments.push_back(std::move(f));
      }
    }
    std::vector<std::size_t> component(n_, kNone);
    for (std::size_t s = 0; s < n_; ++s) {
      if (vertex_embedded_[s] || component[s] != kNone) continue;
      Fragment f;
      f.seed = s;
      std::deque<std::size_t> queue{s};
      component[s] = fragments.size();
      while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (const Arc& a : adj_[v]) {
          if (vertex_embedded_[a.to]) {
            f.attachments.push_back(a.to);
          } else if (component[a.to] == kNone) {
            component[a.to] = component[s];
            queue.push_back(a.to);
          }
        }
      }
      std::sort(f.attachments.begin(), f.attachments.end());
      f.attachments.erase(std::unique(f.attachments.begin(), f.attachments.end()), f.attachments.end());
      fragments.push_back(std::move(f));
    }
    return fragments;
  }

  /// Path through the fragment joining two distinct attachments.
  std::vector<std::size_t> find_path(const Fragment& f) const {
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    if (f.edge != kNone) return {edges_[f.edge].first, edges_[f.edge].second};
    const std::size_t start = f.attachments.front();
    std::size_t entry = kNone;
    for (const Arc& a : adj_[start]) {
      if (!vertex_embedded_[a.to] && reaches(f.seed, a.to)) {
        entry = a.to;
        break;
      }
    }
    assert(entry != kNone);
    std::vector<std::size_t> parent(n_, kNone);
    std::deque<std::size_t> queue{entry};
    parent[entry] = entry;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (const Arc& a : adj_[v]) {
        if (vertex_embedded_[a.to] && a.to != start) {
          std::vector<std::size_t> path{a.to};
          for (std::size_t x = v;; x = parent[x]) {
            path.push_back(x);
            if (x == entry) break;
          }
          path.push_back(start);
          std::reverse(path.begin(), path.end());
          return path;
        }
        if (!vertex_embedded_[a.to] && parent[a.to] == kNone) {
          parent[a.to] = v;
          queue.push_back(a.to);
        }
      }
    }
    throw std::logic_error("planarity: fragment with a single attachment");
  }

  /// Whether `target` lies in the same non-embedded component as `seed`.
  bool reaches(std::size_t seed, std::size_t target) const {
    if (seed == target) return true;
    std::vector<char> seen(n_, 0);
    std::deque<std::size_t> queue{seed};
    seen[seed] = 1;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (const Arc& a : adj_[v]) {
        if (vertex_embedded_[a.to] || seen[a.to]) continue;
        if (a.to == target) return true;
        seen[a.to] = 1;
        queue.push_back(a.to);
      }
    }
    return false;
  }

  void embed_path(const std::vector<std::size_t>& path, std::size_t face_index) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      vertex_embedded_[path[i]] = 1;
      mark_edge(edge_between(path[i], path[i + 1]));
    }
    vertex_embedded_[path.back()] = 1;

    const std::vector<std::size_t> face = faces_[face_index];
    const std::size_t len = face.size();
    const auto pos_a = static_cast<std::size_t>(std::find(face.begin(), face.end(), path.front()) - face.begin());
    const auto pos_b = static_cast<std::size_t>(std::find(face.begin(), face.end(), path.back()) - face.begin());
    std::vector<std::size_t> first, second;
    for (std::size_t i = pos_a;; i = (i + 1) % len) {
      first.push_back(face[i]);
      if (i == pos_b) break;
    }
    for (std::size_t i = path.size() - 2; i >= 1; --i) first.push_back(path[i]);
    for (std::size_t i = pos_b;; i = (i + 1) % len) {
      second.push_back(face[i]);
      if (i == pos_a) break;
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) second.push_back(path[i]);
    faces_[face_index] = std::move(first);
    faces_.push_back(std::move(second));
  }

  std::size_t n_;
  std::vector<DenseEdge> edges_;
  Adjacency adj_;
  std::vector<char> vertex_embedded_;
  std::vector<char> edge_embedded_;
  std::size_t embedded_edges_ = 0;
  std::vector<std::vector<std::size_t>> faces_;
};

}  // namespace

bool is_planar_dense(std::size_t n, std::span<const DenseEdge> edges) {
  std::vector<DenseEdge> simple;
  simple.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("planarity: vertex out of range");
    if (u == v) throw std::invalid_argument("planarity: loops are not supported");
    simple.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(simple.begin(), simple.end());
  simple.erase(std::unique(simple.begin(), simple.end()), simple.end());
  if (n <= 4 || simple.size() < 9) return true;
  if (simple.size() > 3 * n - 6) return false;

  const Adjacency adj = build_adjacency(n, simple);
  std::vector<std::size_t> local(n, 0);
  for (const auto& component : biconnected_components(n, adj)) {
    if (component.size() < 9) continue;
    std::vector<std::size_t> members;
    for (std::size_t e : component) {
      members.push_back(simple[e].first);
      members.push_back(simple[e].second);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (component.size() > 3 * members.size() - 6) return false;
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = i;
    std::vector<DenseEdge> sub;
    sub.reserve(component.size());
    for (std::size_t e : component) sub.emplace_back(local[simple[e].first], local[simple[e].second]);
    if (!PathAddition(members.size(), std::move(sub)).run()) return false;
  }
  return true;
}

bool is_planar(const Multigraph& g) {
  std::vector<DenseEdge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.emplace_back(g.index_of(e.u), g.index_of(e.v));
  return is_planar_dense(g.vertex_count(), edges);
}

}  // namespace critcross
