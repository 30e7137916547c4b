#include "critcross/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "critcross/planarity.hpp"

namespace critcross {

namespace {

using Clock = std::chrono::steady_clock;

struct DenseGraph {
  std::size_t n = 0;
  std::vector<DenseEdge> edges;
};

DenseGraph to_dense(const Multigraph& g) {
  DenseGraph d;
  d.n = g.vertex_count();
  d.edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) d.edges.emplace_back(g.index_of(e.u), g.index_of(e.v));
  return d;
}

bool adjacent(const DenseEdge& a, const DenseEdge& b) {
  return a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second;
}

/// Tests one subset of crossing pairs over all crossing orders. Fills `orders` on success.
class SubsetTester {
 public:
  SubsetTester(const DenseGraph& g, const std::vector<CrossingPair>& candidates)
      : g_(g), candidates_(candidates), crossings_(g.edges.size()) {}

  bool test(const std::vector<std::size_t>& subset, std::map<EdgeId, std::vector<std::size_t>>& orders) {
    for (auto& list : crossings_) list.clear();
    multi_.clear();
    for (std::size_t i = 0; i < subset.size(); ++i) {
      const CrossingPair& p = candidates_[subset[i]];
      crossings_[p.first].push_back(i);
      crossings_[p.second].push_back(i);
    }
    for (EdgeId e = 0; e < crossings_.size(); ++e) {
      if (crossings_[e].size() > 1) multi_.push_back(e);
    }
    if (!search(0, subset.size())) return false;
    orders.clear();
    for (EdgeId e : multi_) orders[e] = crossings_[e];
    return true;
  }

 private:
  bool search(std::size_t depth, std::size_t k) {
    if (depth == multi_.size()) return planar(k);
    auto& list = crossings_[multi_[depth]];
    std::sort(list.begin(), list.end());
    do {
      if (search(depth + 1, k)) return true;
    } while (std::next_permutation(list.begin(), list.end()));
    return false;
  }

  bool planar(std::size_t k) {
    edges_.clear();
    for (EdgeId e = 0; e < g_.edges.size(); ++e) {
      std::size_t prev = g_.edges[e].first;
      for (std::size_t c : crossings_[e]) {
        edges_.emplace_back(prev, g_.n + c);
        prev = g_.n + c;
      }
      edges_.emplace_back(prev, g_.edges[e].second);
    }
    return is_planar_dense(g_.n + k, edges_);
  }

  const DenseGraph& g_;
  const std::vector<CrossingPair>& candidates_;
  std::vector<std::vector<std::size_t>> crossings_;
  std::vector<EdgeId> multi_;
  std::vector<DenseEdge> edges_;
};

/// Nonplanar subgraphs of g, each given as the candidate pairs lying inside it. Any good
/// drawing crosses some pair inside each of them, so a subset missing one is skipped.
struct ObstructionFamily {
  std::vector<std::vector<char>> contains;  // [obstruction][candidate pair]
  std::vector<std::size_t> last;            // highest candidate index inside each obstruction
  std::vector<std::vector<std::size_t>> by_pair;  // obstructions containing each candidate
};

/// Deletes edges in the given order while the rest stays nonplanar. The survivors form a
/// subdivision of K5 or K3,3.
std::vector<char> minimal_nonplanar(const DenseGraph& g, std::vector<char> keep, const std::vector<EdgeId>& order) {
  std::vector<DenseEdge> edges;
  for (EdgeId e : order) {
    if (!keep[e]) continue;
    keep[e] = 0;
    edges.clear();
    for (EdgeId f = 0; f < g.edges.size(); ++f) {
      if (keep[f]) edges.push_back(g.edges[f]);
    }
    if (is_planar_dense(g.n, edges)) keep[e] = 1;
  }
  return keep;
}

ObstructionFamily find_obstructions(const DenseGraph& g, const std::vector<CrossingPair>& candidates) {
  ObstructionFamily fam;
  fam.by_pair.resize(candidates.size());
  if (is_planar_dense(g.n, g.edges)) return fam;
  const std::size_t m = g.edges.size();
  std::set<std::vector<char>> found;
  std::mt19937_64 rng(0x5eed);
  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), EdgeId{0});
  // one pass per seed shuffle, plus passes that protect each edge, for spread
  for (std::size_t round = 0; round < 2 * m + 16; ++round) {
    std::shuffle(order.begin(), order.end(), rng);
    if (round < m) std::stable_partition(order.begin(), order.end(), [&](EdgeId e) { return e != round; });
    found.insert(minimal_nonplanar(g, std::vector<char>(m, 1), order));
  }
  for (const auto& edges : found) {
    std::vector<char> inside(candidates.size(), 0);
    std::size_t last = 0;
    bool any = false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (edges[candidates[i].first] && edges[candidates[i].second]) {
        inside[i] = 1;
        last = i;
        any = true;
      }
    }
    if (!any) continue;  // cannot happen for a Kuratowski subdivision
    const std::size_t id = fam.contains.size();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (inside[i]) fam.by_pair[i].push_back(id);
    }
    fam.contains.push_back(std::move(inside));
    fam.last.push_back(last);
  }
  return fam;
}

enum class LevelOutcome { kFound, kExhausted, kAborted };

struct LevelResult {
  LevelOutcome outcome = LevelOutcome::kExhausted;
  std::vector<std::size_t> subset;
  std::map<EdgeId, std::vector<std::size_t>> orders;
};

/// Depth-first enumeration of k-subsets in lexicographic order, skipping subsets that
/// miss an obstruction. Stops at the first realizable subset.
class LevelSearch {
 public:
  LevelSearch(const DenseGraph& g, const std::vector<CrossingPair>& candidates, const ObstructionFamily& fam,
              std::size_t k, Clock::time_point deadline, const std::atomic<bool>& abort)
      : candidates_(candidates), fam_(fam), k_(k), deadline_(deadline), abort_(abort), tester_(g, candidates),
        hits_(fam.contains.size(), 0) {}

  /// Searches subsets whose smallest element is `first`.
  LevelOutcome run(std::size_t first) {
    subset_.clear();
    std::fill(hits_.begin(), hits_.end(), 0);
    return descend(first, first + 1);
  }
  const std::vector<std::size_t>& subset() const { return subset_; }
  const std::map<EdgeId, std::vector<std::size_t>>& orders() const { return orders_; }

 private:
  LevelOutcome descend(std::size_t pick, std::size_t next) {
    push(pick);
    const LevelOutcome out = subset_.size() == k_ ? leaf() : branch(next);
    if (out != LevelOutcome::kFound) pop(pick);
    return out;
  }

  LevelOutcome branch(std::size_t next) {
    const std::size_t n = candidates_.size();
    const std::size_t slots = k_ - subset_.size();
    for (std::size_t i = next; i + slots <= n; ++i) {
      if (i > open_bound()) break;
      const LevelOutcome out = descend(i, i + 1);
      if (out != LevelOutcome::kExhausted) return out;
    }
    return LevelOutcome::kExhausted;
  }

  LevelOutcome leaf() {
    if ((++leaves_ & 255) == 0 && (abort_.load() || Clock::now() > deadline_)) return LevelOutcome::kAborted;
    for (char h : hits_) {
      if (h == 0) return LevelOutcome::kExhausted;
    }
    return tester_.test(subset_, orders_) ? LevelOutcome::kFound : LevelOutcome::kExhausted;
  }

  /// Largest index that can still be picked next: every unhit obstruction needs a pair
  /// at or beyond it.
  std::size_t open_bound() const {
    std::size_t bound = std::numeric_limits<std::size_t>::max();
    for (std::size_t h = 0; h < hits_.size(); ++h) {
      if (hits_[h] == 0) bound = std::min(bound, fam_.last[h]);
    }
    return bound;
  }

  void push(std::size_t i) {
    subset_.push_back(i);
    for (std::size_t h : fam_.by_pair[i]) ++hits_[h];
  }
  void pop(std::size_t i) {
    subset_.pop_back();
    for (std::size_t h : fam_.by_pair[i]) --hits_[h];
  }

  const std::vector<CrossingPair>& candidates_;
  const ObstructionFamily& fam_;
  std::size_t k_;
  Clock::time_point deadline_;
  const std::atomic<bool>& abort_;
  SubsetTester tester_;
  std::vector<std::size_t> hits_;
  std::vector<std::size_t> subset_;
  std::map<EdgeId, std::vector<std::size_t>> orders_;
  std::uint64_t leaves_ = 0;
};

LevelResult search_level(const DenseGraph& g, const std::vector<CrossingPair>& candidates,
                         const ObstructionFamily& fam, std::size_t k, Clock::time_point deadline, unsigned threads) {
  if (k == 0) {
    SubsetTester tester(g, candidates);
    LevelResult r;
    if (tester.test({}, r.orders)) r.outcome = LevelOutcome::kFound;
    return r;
  }
  const std::size_t n = candidates.size();
  if (k > n) return {};
  const std::size_t firsts = n - k + 1;

  // Workers take first elements in increasing order; the smallest first element with a
  // witness wins, so the result does not depend on scheduling.
  std::atomic<std::size_t> next_first{0};
  std::atomic<std::size_t> best_first{std::numeric_limits<std::size_t>::max()};
  std::atomic<bool> aborted{false};
  std::mutex mu;
  LevelResult best;

  auto worker = [&] {
    LevelSearch search(g, candidates, fam, k, deadline, aborted);
    while (!aborted.load()) {
      const std::size_t first = next_first.fetch_add(1);
      if (first >= firsts || first > best_first.load()) return;
      const LevelOutcome out = search.run(first);
      if (out == LevelOutcome::kAborted) {
        aborted.store(true);
        return;
      }
      if (out == LevelOutcome::kFound) {
        std::lock_guard lock(mu);
        if (first < best_first.load()) {
          best_first.store(first);
          best.subset = search.subset();
          best.orders = search.orders();
        }
        return;
      }
    }
  };

  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(firsts)));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  // Lower levels are exhausted, so any witness settles the value. Without an abort it
  // is also the lexicographically first one, independent of the thread count.
  if (best_first.load() != std::numeric_limits<std::size_t>::max()) {
    best.outcome = LevelOutcome::kFound;
    return best;
  }
  if (aborted.load()) return {LevelOutcome::kAborted, {}, {}};
  return best;
}

std::vector<CrossingPair> candidate_pairs(const DenseGraph& g) {
  std::vector<CrossingPair> out;
  for (EdgeId e = 0; e < g.edges.size(); ++e) {
    for (EdgeId f = e + 1; f < g.edges.size(); ++f) {
      if (!adjacent(g.edges[e], g.edges[f])) out.push_back({e, f});
    }
  }
  return out;
}

}  // namespace

std::size_t euler_lower_bound(const Multigraph& g) {
  const auto v = static_cast<long long>(g.vertex_count());
  const auto e = static_cast<long long>(g.edge_count());
  if (v < 3) return 0;
  return static_cast<std::size_t>(std::max(0LL, e - 3 * v + 6));
}

bool is_triangle_free(const Multigraph& g) {
  const auto adj = g.dense_adjacency();
  std::vector<std::vector<char>> mark(adj.size(), std::vector<char>(adj.size(), 0));
  for (std::size_t u = 0; u < adj.size(); ++u) {
    for (std::size_t v : adj[u]) mark[u][v] = 1;
  }
  for (std::size_t u = 0; u < adj.size(); ++u) {
    for (std::size_t v : adj[u]) {
      for (std::size_t w : adj[v]) {
        if (w != u && mark[u][w]) return false;
      }
    }
  }
  return true;
}

std::size_t crossing_lower_bound(const Multigraph& g, bool use_triangle_free) {
  std::size_t bound = euler_lower_bound(g);
  if (use_triangle_free && g.vertex_count() >= 3 && is_triangle_free(g)) {
    const auto v = static_cast<long long>(g.vertex_count());
    const auto e = static_cast<long long>(g.edge_count());
    bound = std::max(bound, static_cast<std::size_t>(std::max(0LL, e - 2 * v + 4)));
  }
  return bound;
}

OracleResult crossing_number_exact(const Multigraph& g, const OracleOptions& options) {
  if (!g.is_simple()) throw GraphError("crossing oracle: graph must be simple");
  const Clock::time_point deadline = Clock::now() + options.budget;
  const unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  const DenseGraph dense = to_dense(g);
  const std::vector<CrossingPair> candidates = candidate_pairs(dense);
  const std::size_t lower = crossing_lower_bound(g, options.triangle_free_bound);
  const ObstructionFamily obstructions = find_obstructions(dense, candidates);

  OracleResult result;
  result.highest_exhausted = static_cast<long long>(std::min(lower, options.max_k + 1)) - 1;
  for (std::size_t k = lower; k <= options.max_k; ++k) {
    if (k > candidates.size()) {
      result.highest_exhausted = static_cast<long long>(options.max_k);
      break;
    }
    LevelResult level = search_level(dense, candidates, obstructions, k, deadline, threads);
    if (level.outcome == LevelOutcome::kAborted) {
      result.status = OracleResult::Status::kBudgetExceeded;
      return result;
    }
    if (level.outcome == LevelOutcome::kFound) {
      CrossingCertificate cert;
      cert.k = k;
      for (std::size_t i : level.subset) cert.witness.push_back(candidates[i]);
      cert.orderings = std::move(level.orders);
      if (k > 0) cert.exhausted_level = k - 1;
      result.status = OracleResult::Status::kExact;
      result.certificate = std::move(cert);
      return result;
    }
    result.highest_exhausted = static_cast<long long>(k);
  }
  result.status = OracleResult::Status::kAboveMaxK;
  return result;
}

Multigraph planarize(const Multigraph& g, const CrossingCertificate& certificate) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> along(g.edge_count());
  for (std::size_t i = 0; i < certificate.witness.size(); ++i) {
    const CrossingPair& p = certificate.witness[i];
    if (p.first >= g.edge_count() || p.second >= g.edge_count()) throw GraphError("planarize: bad edge id");
    if (adjacent({g.index_of(g.edge(p.first).u), g.index_of(g.edge(p.first).v)},
                 {g.index_of(g.edge(p.second).u), g.index_of(g.edge(p.second).v)})) {
      throw GraphError("planarize: witness pair shares an endpoint");
    }
    along[p.first].push_back(i);
    along[p.second].push_back(i);
  }
  for (const auto& [e, order] : certificate.orderings) {
    if (e >= along.size()) throw GraphError("planarize: bad edge id in ordering");
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != along[e]) throw GraphError("planarize: ordering does not match the witness");
    along[e] = order;
  }
  Multigraph out(n + certificate.witness.size());
  auto vid = [](std::size_t i) { return VertexId{static_cast<std::uint32_t>(i)}; };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (along[e].size() > 1 && !certificate.orderings.count(e)) {
      throw GraphError("planarize: missing ordering for edge " + std::to_string(e));
    }
    std::size_t prev = g.index_of(g.edge(e).u);
    for (std::size_t c : along[e]) {
      out.add_edge(vid(prev), vid(n + c));
      prev = n + c;
    }
    out.add_edge(vid(prev), vid(g.index_of(g.edge(e).v)));
  }
  return out;
}

CriticalityReport is_edge_critical(const Multigraph& g, std::size_t k, const OracleOptions& options) {
  CriticalityReport report;
  if (k == 0) {
    report.verdict = CriticalityReport::Verdict::kNotCritical;
    return report;
  }
  const Clock::time_point deadline = Clock::now() + options.budget;
  bool all_decrease = true;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    OracleOptions sub = options;
    sub.max_k = k - 1;
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
    if (left.count() <= 0) {
      report.verdict = CriticalityReport::Verdict::kInconclusive;
      return report;
    }
    sub.budget = left;
    const OracleResult r = crossing_number_exact(delete_edge(g, e), sub);
    EdgeCriticality item{e, r.status, std::nullopt};
    if (r.certificate) item.reduced_value = r.certificate->k;
    report.edges.push_back(item);
    if (r.status == OracleResult::Status::kBudgetExceeded) {
      report.verdict = CriticalityReport::Verdict::kInconclusive;
      return report;
    }
    if (r.status == OracleResult::Status::kAboveMaxK) all_decrease = false;
  }
  report.verdict = all_decrease ? CriticalityReport::Verdict::kCritical : CriticalityReport::Verdict::kNotCritical;
  return report;
}

}  // namespace critcross
