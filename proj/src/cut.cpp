#include "quic/cut.hpp"

#include <bit>
#include <string>

#include "quic/error.hpp"

namespace quic {

std::uint32_t cut_value(const Graph &g, std::uint64_t s) {
  if (g.num_vertices() > 64) throw Error(ErrorCode::OutOfRange, "cut_value mask form needs n <= 64");
  std::uint32_t cut = 0;
  for (const Edge &e : g.edges()) cut += ((s >> e.u) ^ (s >> e.v)) & 1U;
  return cut;
}

std::uint32_t cut_value(const Graph &g, std::span<const std::uint8_t> bits) {
  if (bits.size() != g.num_vertices()) {
    throw Error(ErrorCode::LengthMismatch, "cut_value: bitstring length " +
                                               std::to_string(bits.size()) + " != n = " +
                                               std::to_string(g.num_vertices()));
  }
  std::uint32_t cut = 0;
  for (const Edge &e : g.edges()) cut += (bits[e.u] != 0) != (bits[e.v] != 0);
  return cut;
}

std::vector<std::uint32_t> all_cut_values(const Graph &g) {
  const std::size_t n = g.num_vertices();
  if (n > 30) throw Error(ErrorCode::SizeCeiling, "all_cut_values: n > 30");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::uint32_t> cut(dim, 0);
  std::vector<std::uint64_t> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.adjacency_mask(v);
  // Moving vertex v to side 1 flips every incident edge: the ones to side-0
  // neighbors join the cut, the ones to side-1 neighbors leave it.
  for (std::size_t s = 1; s < dim; ++s) {
    const int v = std::countr_zero(s);
    const std::size_t rest = s & (s - 1);
    const auto into_rest = static_cast<std::uint32_t>(std::popcount(adj[v] & rest));
    cut[s] = cut[rest] + static_cast<std::uint32_t>(g.degree(v)) - 2 * into_rest;
  }
  return cut;
}

std::vector<std::uint8_t> parse_bits(std::string_view text) {
  std::vector<std::uint8_t> bits(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[text.size() - 1 - i];
    if (c != '0' && c != '1') throw Error(ErrorCode::Parse, "bitstring must contain only 0/1");
    bits[i] = c == '1';
  }
  return bits;
}

Graph reconstruct_from_cuts(std::size_t n, const CutOracle &cut_oracle) {
  if (n > 64) throw Error(ErrorCode::OutOfRange, "reconstruct_from_cuts: n > 64");
  if (cut_oracle(0) != 0) throw Error(ErrorCode::InconsistentOracle, "cut(0...0) must be 0");
  std::vector<std::int64_t> single(n);
  for (std::size_t u = 0; u < n; ++u) single[u] = cut_oracle(std::uint64_t{1} << u);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
      const std::int64_t coeff = single[u] + single[v] - cut_oracle(pair);
      if (coeff == 2) {
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      } else if (coeff != 0) {
        throw Error(ErrorCode::InconsistentOracle,
                    "pair (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") has coefficient " + std::to_string(coeff) + ", expected 0 or 2");
      }
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (single[u] != static_cast<std::int64_t>(g.degree(static_cast<Vertex>(u)))) {
      throw Error(ErrorCode::InconsistentOracle,
                  "cut(e_" + std::to_string(u) + ") disagrees with the recovered degree");
    }
  }
  return g;
}

}  // namespace quic
