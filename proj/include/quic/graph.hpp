#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace quic {

using Vertex = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept as a sorted list alongside per-vertex neighbor lists and
/// adjacency bitsets, so membership and cut evaluation are word operations.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge> &edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return nbrs_.at(v); }
  std::size_t degree(Vertex v) const { return nbrs_.at(v).size(); }
  std::size_t max_degree() const noexcept;
  std::size_t min_degree() const noexcept;
  /// Degree of every vertex, indexed by vertex.
  std::vector<std::size_t> degrees() const;
  /// Degrees sorted non-increasing.
  std::vector<std::size_t> degree_sequence() const;

  bool has_edge(Vertex a, Vertex b) const;

  /// Adjacency of `v` as a 64-bit mask; only valid when n <= 64.
  std::uint64_t adjacency_mask(Vertex v) const;

  /// Adds {a, b}; returns false if it was already present.
  bool add_edge(Vertex a, Vertex b);
  /// Removes {a, b}; returns false if it was absent.
  bool remove_edge(Vertex a, Vertex b);

  /// Image of the graph under vertex map v -> perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  bool is_connected() const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t words() const noexcept { return (n_ + 63) / 64; }
  void check_vertex(Vertex v, const char *what) const;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<std::uint64_t> bits_;
};

/// Short human-readable summary, e.g. "Graph(n=4, m=5)".
std::string describe(const Graph &g);

/// 64-bit structural fingerprint of the labeled edge set (FNV-1a).
std::uint64_t graph_hash(const Graph &g);

}  // namespace quic
