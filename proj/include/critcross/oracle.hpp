#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "critcross/multigraph.hpp"

namespace critcross {

// The search ranges over good drawings only: adjacent edges never cross and two edges
// cross at most once. Every graph has an optimal drawing of this kind (see Schaefer,
// "The Graph Crossing Number and its Variants: A Survey", Electron. J. Combin. DS21),
// so the value is cr(G).
// Multigraphs are rejected.

inline constexpr std::chrono::seconds kDefaultOracleBudget{600};

struct OracleOptions {
  std::size_t max_k = 8;
  std::chrono::milliseconds budget = kDefaultOracleBudget;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Also use |E| - 2|V| + 4 for triangle-free graphs.
  bool triangle_free_bound = true;
};

/// Edge ids are positions in g.edges().
struct CrossingPair {
  EdgeId first;
  EdgeId second;
};

struct CrossingCertificate {
  std::size_t k = 0;
  std::vector<CrossingPair> witness;
  /// For each edge crossed more than once: witness indices in order from edge.u to edge.v.
  std::map<EdgeId, std::vector<std::size_t>> orderings;
  /// Every level below k was ruled out (by search or by the lower bound).
  std::optional<std::size_t> exhausted_level;
};

struct OracleResult {
  enum class Status {
    kExact,         // certificate holds cr(g)
    kAboveMaxK,     // every level up to max_k was ruled out
    kBudgetExceeded,
  };
  Status status = Status::kBudgetExceeded;
  std::optional<CrossingCertificate> certificate;
  /// Highest level known to admit no drawing; -1 if none.
  long long highest_exhausted = -1;
};

/// max(0, |E| - 3|V| + 6), or 0 when |V| < 3.
std::size_t euler_lower_bound(const Multigraph& g);
bool is_triangle_free(const Multigraph& g);
/// The Euler bound, sharpened to |E| - 2|V| + 4 for triangle-free graphs if requested.
std::size_t crossing_lower_bound(const Multigraph& g, bool use_triangle_free = true);

OracleResult crossing_number_exact(const Multigraph& g, const OracleOptions& options = {});

/// Replaces each witness crossing by a degree-4 vertex. Dummy vertices follow the
/// original ones, in witness order.
Multigraph planarize(const Multigraph& g, const CrossingCertificate& certificate);

struct EdgeCriticality {
  EdgeId edge;
  OracleResult::Status status;  // kExact: cr(g - e) < k; kAboveMaxK: no decrease
  std::optional<std::size_t> reduced_value;
};

struct CriticalityReport {
  enum class Verdict { kCritical, kNotCritical, kInconclusive };
  Verdict verdict = Verdict::kInconclusive;
  std::vector<EdgeCriticality> edges;
};

/// Edge-deletion criticality at crossing number k: cr(g - e) < k for every edge e.
/// k = 0 is never critical. The budget covers the whole call.
CriticalityReport is_edge_critical(const Multigraph& g, std::size_t k, const OracleOptions& options = {});

}  // namespace critcross
