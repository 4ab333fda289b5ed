#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quic/graph.hpp"

namespace quic {

enum class Family {
  Path,
  Cycle,
  Pan,
  Star,
  Complete,
  CompleteMinusEdge,
  CompleteBipartite,
  ErdosRenyi,
  BarabasiAlbert,
  Broom,
  ChordedCycle,
  InscribedTriangleCycle,
  CircularLadder,
  TwistedLadder,
  Circulant,
  Named,
};

/// Family tag plus the parameters the family reads. Unused fields are ignored.
///
///   path/cycle/complete/complete_minus_edge  n
///   pan            n vertices: a cycle on n-1 vertices plus one pendant
///   star           n vertices: a center joined to n-1 leaves
///   complete_bipartite  n, k part sizes
///   er             n, p, seed
///   ba             n, k = attachments per new vertex, seed
///   broom          n vertices, k pendants, extra_edge joins pendants 1 and 2
///   chorded_cycle  C_n plus chord (0, k)
///   inscribed_triangle_cycle  C_n plus chords (0, 2) and (k, k + 2)
///   circular_ladder / twisted_ladder  n rungs (2n vertices)
///   circulant      n, jumps
///   named          name in {petersen, shrikhande, rook4x4, q3, lk24, prism5,
///                  c8_1_4, c8_1_2}
struct GraphFamilySpec {
  Family family = Family::Path;
  std::size_t n = 0;
  std::size_t k = 0;
  double p = 0.0;
  std::vector<std::size_t> jumps;
  std::string name;
  std::uint64_t seed = 0;
  bool extra_edge = false;
};

Graph generate(const GraphFamilySpec &spec);

/// Parses "family:arg:arg..." e.g. "path:6", "er:12:0.35:7", "ba:10:2:3",
/// "broom:17:2", "broom+:17:2" (pendant-edge variant), "k:4", "k-e:4",
/// "kb:3:4", "chorded:12:3", "triangles:12:5", "ladder:6", "twisted:6",
/// "circulant:8:1:4", "named:shrikhande" or a bare named-graph identifier.
GraphFamilySpec parse_family(std::string_view text);

/// Inverse of parse_family for display and artifact metadata.
std::string to_string(const GraphFamilySpec &spec);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph pan_graph(std::size_t n);
Graph star_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_minus_edge(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);
Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);
Graph broom_graph(std::size_t n, std::size_t pendants, bool pendant_edge = false);
Graph chorded_cycle(std::size_t n, std::size_t k);
Graph inscribed_triangle_cycle(std::size_t n, std::size_t k);
Graph circular_ladder(std::size_t rungs);
Graph twisted_ladder(std::size_t rungs);
Graph circulant_graph(std::size_t n, const std::vector<std::size_t> &jumps);
Graph named_graph(std::string_view name);

}  // namespace quic
