#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "quic/graph.hpp"

namespace quic {

/// What a vertex of a CFI graph stands for in the base graph.
struct CfiVertexRole {
  enum class Kind : std::uint8_t { EdgeEnd, Inner };
  Kind kind = Kind::Inner;
  Vertex base = 0;          // gadget owner
  Vertex neighbor = 0;      // EdgeEnd only: other endpoint of the base edge
  std::uint8_t bit = 0;     // EdgeEnd only
  std::uint32_t subset = 0; // Inner only: even-weight label, bit i = i-th incident edge
};

struct CfiPair {
  Graph base;
  Graph untwisted;
  Graph twisted;
  Edge twist_edge;
  std::vector<CfiVertexRole> roles;
};

/// Vertex count sum_v (2^(d_v - 1) + 2 d_v). Throws IsolatedVertex on d_v = 0.
std::size_t cfi_size(const Graph &base);

/// Vertex numbering shared by every CFI graph over `base`:
///   edge-end vertices first, by base vertex, then neighbor, then bit;
///   inner vertices next, by base vertex, then label ascending.
/// Incident edges of a gadget are ordered by neighbor id.
std::vector<CfiVertexRole> cfi_roles(const Graph &base);

/// CFI graph with the bridges of every edge in `twisted` crossed.
Graph cfi_graph(const Graph &base, std::span<const Edge> twisted);

/// Untwisted/twisted pair. The twist defaults to the smallest edge.
/// Throws DisconnectedBase, IsolatedVertex, or InvalidParameter("twist_edge").
CfiPair build_cfi(const Graph &base, std::optional<Edge> twist_edge = std::nullopt);

}  // namespace quic
