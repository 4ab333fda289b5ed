#include "quic/graph.hpp"

#include <algorithm>
#include <queue>

#include "quic/error.hpp"

namespace quic {

const char *to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::LengthMismatch: return "length-mismatch";
    case ErrorCode::OutOfRange: return "out-of-range";
    case ErrorCode::InconsistentOracle: return "inconsistent-oracle";
    case ErrorCode::RewireExhausted: return "rewire-exhausted";
    case ErrorCode::DisconnectedBase: return "disconnected-base";
    case ErrorCode::IsolatedVertex: return "isolated-vertex";
    case ErrorCode::SizeCeiling: return "size-ceiling";
    case ErrorCode::NegativeEntry: return "negative-entry";
    case ErrorCode::InsufficientShots: return "insufficient-shots";
    case ErrorCode::Parse: return "parse";
  }
  return "unknown";
}

Graph::Graph(std::size_t n) : n_(n), nbrs_(n), bits_(n * words(), 0) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge &e : edges) {
    if (e.u == e.v) throw InvalidParameter("edges", "self-loop at vertex " + std::to_string(e.u));
    if (!add_edge(e.u, e.v)) {
      throw InvalidParameter("edges", "duplicate edge (" + std::to_string(e.u) + ", " +
                                          std::to_string(e.v) + ")");
    }
  }
}

Graph::Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(n) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) list.emplace_back(a, b);
  *this = Graph(n, list);
}

void Graph::check_vertex(Vertex v, const char *what) const {
  if (v >= n_) {
    throw Error(ErrorCode::OutOfRange, std::string(what) + ": vertex " + std::to_string(v) +
                                           " >= n = " + std::to_string(n_));
  }
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto &nb : nbrs_) best = std::max(best, nb.size());
  return best;
}

std::size_t Graph::min_degree() const noexcept {
  if (n_ == 0) return 0;
  std::size_t best = nbrs_.front().size();
  for (const auto &nb : nbrs_) best = std::min(best, nb.size());
  return best;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(n_);
  for (std::size_t v = 0; v < n_; ++v) d[v] = nbrs_[v].size();
  return d;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  auto d = degrees();
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  check_vertex(a, "has_edge");
  check_vertex(b, "has_edge");
  return (bits_[a * words() + b / 64] >> (b % 64)) & 1U;
}

std::uint64_t Graph::adjacency_mask(Vertex v) const {
  if (n_ > 64) throw Error(ErrorCode::OutOfRange, "adjacency_mask requires n <= 64");
  check_vertex(v, "adjacency_mask");
  return bits_[v];
}

bool Graph::add_edge(Vertex a, Vertex b) {
  check_vertex(a, "add_edge");
  check_vertex(b, "add_edge");
  if (a == b) throw InvalidParameter("edges", "self-loop at vertex " + std::to_string(a));
  if (has_edge(a, b)) return false;
  Edge e(a, b);
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
  nbrs_[a].insert(std::lower_bound(nbrs_[a].begin(), nbrs_[a].end(), b), b);
  nbrs_[b].insert(std::lower_bound(nbrs_[b].begin(), nbrs_[b].end(), a), a);
  bits_[a * words() + b / 64] |= std::uint64_t{1} << (b % 64);
  bits_[b * words() + a / 64] |= std::uint64_t{1} << (a % 64);
  return true;
}

bool Graph::remove_edge(Vertex a, Vertex b) {
  check_vertex(a, "remove_edge");
  check_vertex(b, "remove_edge");
  if (a == b || !has_edge(a, b)) return false;
  Edge e(a, b);
  edges_.erase(std::lower_bound(edges_.begin(), edges_.end(), e));
  nbrs_[a].erase(std::lower_bound(nbrs_[a].begin(), nbrs_[a].end(), b));
  nbrs_[b].erase(std::lower_bound(nbrs_[b].begin(), nbrs_[b].end(), a));
  bits_[a * words() + b / 64] &= ~(std::uint64_t{1} << (b % 64));
  bits_[b * words() + a / 64] &= ~(std::uint64_t{1} << (a % 64));
  return true;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) {
    throw Error(ErrorCode::LengthMismatch, "relabel: permutation length " +
                                               std::to_string(perm.size()) + " != n");
  }
  std::vector<bool> seen(n_, false);
  for (Vertex p : perm) {
    if (p >= n_ || seen[p]) throw InvalidParameter("perm", "not a permutation of 0..n-1");
    seen[p] = true;
  }
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (const Edge &e : edges_) mapped.emplace_back(perm[e.u], perm[e.v]);
  return Graph(n_, mapped);
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<bool> seen(n_, false);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex u : nbrs_[v]) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        frontier.push(u);
      }
    }
  }
  return reached == n_;
}

std::string describe(const Graph &g) {
  return "Graph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) +
         ")";
}

std::uint64_t graph_hash(const Graph &g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(g.num_vertices());
  for (const Edge &e : g.edges()) mix((std::uint64_t{e.u} << 32) | e.v);
  return h;
}

}  // namespace quic
