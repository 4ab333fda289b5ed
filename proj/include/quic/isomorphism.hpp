#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quic/graph.hpp"

namespace quic {

/// Exact isomorphism test by backtracking over vertex individualizations,
/// pruned by joint color refinement of both graphs at every node. Practical
/// for the sizes used here (tens of vertices); not a canonical labeling.
bool is_isomorphic(const Graph &g, const Graph &h);

/// A bijection `map` with h-edge {map[u], map[v]} for every g-edge {u, v}.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph &g, const Graph &h);

/// Stable 1-WL coloring of a single graph, starting from the uniform coloring.
/// Colors are dense ids in [0, #classes).
std::vector<std::uint32_t> color_refinement(const Graph &g);

/// True when 1-WL refinement run on both graphs side by side never separates
/// their color histograms.
bool wl1_equivalent(const Graph &g, const Graph &h);

}  // namespace quic
