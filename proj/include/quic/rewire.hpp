#pragma once

#include <cstdint>

#include "quic/graph.hpp"

namespace quic {

/// Applies random double-edge swaps {a,b},{c,d} -> {a,d},{c,b} to a copy of
/// `g` and returns the first intermediate graph that is not isomorphic to `g`.
/// Every proposal (valid or not) consumes one of `attempts`. Degree sequence
/// is preserved exactly. Throws ErrorCode::RewireExhausted when the budget
/// runs out, which is certain for graphs whose degree sequence has a unique
/// realization (complete graphs, for instance).
Graph rewire_degree_preserving(const Graph &g, std::size_t attempts, std::uint64_t seed);

}  // namespace quic
