#include "quic/rewire.hpp"

#include <string>

#include "quic/error.hpp"
#include "quic/isomorphism.hpp"
#include "quic/rng.hpp"

namespace quic {

Graph rewire_degree_preserving(const Graph &g, std::size_t attempts, std::uint64_t seed) {
  if (g.num_edges() < 2) throw InvalidParameter("g", "rewiring needs at least 2 edges");
  Rng rng = make_rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, g.num_edges() - 1);
  std::bernoulli_distribution flip(0.5);
  Graph work = g;
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    if (i == j) continue;
    Edge e1 = work.edges()[i];
    Edge e2 = work.edges()[j];
    Vertex a = e1.u, b = e1.v, c = e2.u, d = e2.v;
    if (flip(rng)) std::swap(c, d);
    if (a == d || c == b || a == c || b == d) continue;
    if (work.has_edge(a, d) || work.has_edge(c, b)) continue;
    work.remove_edge(a, b);
    work.remove_edge(c, d);
    work.add_edge(a, d);
    work.add_edge(c, b);
    if (!is_isomorphic(work, g)) return work;
  }
  throw Error(ErrorCode::RewireExhausted,
              "no non-isomorphic rewiring found in " + std::to_string(attempts) + " attempts");
}

}  // namespace quic
