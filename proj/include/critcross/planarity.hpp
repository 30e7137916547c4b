#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "critcross/multigraph.hpp"

namespace critcross {

using DenseEdge = std::pair<std::size_t, std::size_t>;

/// Planarity of the graph on vertices 0..n-1. Parallel edges are ignored; loops are
/// not accepted. Path-addition (Demoucron-Malgrange-Pertuiset) run per biconnected
/// component, quadratic per component.
bool is_planar_dense(std::size_t n, std::span<const DenseEdge> edges);

bool is_planar(const Multigraph& g);

}  // namespace critcross
