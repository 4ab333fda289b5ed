#include "quic/cfi.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "quic/error.hpp"

namespace quic {

namespace {

constexpr std::size_t kMaxGadgetDegree = 24;

void check_base(const Graph &base) {
  for (Vertex v = 0; v < base.num_vertices(); ++v) {
    if (base.degree(v) == 0) {
      throw Error(ErrorCode::IsolatedVertex, "cfi: base vertex " + std::to_string(v) +
                                                 " has no incident edges");
    }
    if (base.degree(v) > kMaxGadgetDegree) {
      throw InvalidParameter("base", "cfi: degree of vertex " + std::to_string(v) +
                                         " exceeds " + std::to_string(kMaxGadgetDegree));
    }
  }
  if (!base.is_connected()) throw Error(ErrorCode::DisconnectedBase, "cfi: base is disconnected");
}

struct Layout {
  std::vector<std::size_t> edge_offset;   // first edge-end id of each gadget
  std::vector<std::size_t> inner_offset;  // first inner id of each gadget
  std::size_t total = 0;
};

Layout make_layout(const Graph &base) {
  const std::size_t n = base.num_vertices();
  Layout lay;
  lay.edge_offset.resize(n);
  lay.inner_offset.resize(n);
  std::size_t next = 0;
  for (Vertex v = 0; v < n; ++v) {
    lay.edge_offset[v] = next;
    next += 2 * base.degree(v);
  }
  for (Vertex v = 0; v < n; ++v) {
    lay.inner_offset[v] = next;
    next += std::size_t{1} << (base.degree(v) - 1);
  }
  lay.total = next;
  return lay;
}

std::size_t incident_index(const Graph &base, Vertex v, Vertex w) {
  const auto nb = base.neighbors(v);
  return static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
}

// Even-weight labels on d bits in ascending order.
std::vector<std::uint32_t> even_labels(std::size_t d) {
  std::vector<std::uint32_t> out;
  out.reserve(std::size_t{1} << (d - 1));
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << d); ++s) {
    if (std::popcount(s) % 2 == 0) out.push_back(s);
  }
  return out;
}

}  // namespace

std::size_t cfi_size(const Graph &base) {
  std::size_t total = 0;
  for (Vertex v = 0; v < base.num_vertices(); ++v) {
    const std::size_t d = base.degree(v);
    if (d == 0) {
      throw Error(ErrorCode::IsolatedVertex, "cfi_size: base vertex " + std::to_string(v) +
                                                 " has no incident edges");
    }
    total += (std::size_t{1} << (d - 1)) + 2 * d;
  }
  return total;
}

std::vector<CfiVertexRole> cfi_roles(const Graph &base) {
  check_base(base);
  std::vector<CfiVertexRole> roles;
  roles.reserve(cfi_size(base));
  for (Vertex v = 0; v < base.num_vertices(); ++v) {
    for (Vertex w : base.neighbors(v)) {
      for (std::uint8_t b = 0; b < 2; ++b) {
        roles.push_back({CfiVertexRole::Kind::EdgeEnd, v, w, b, 0});
      }
    }
  }
  for (Vertex v = 0; v < base.num_vertices(); ++v) {
    for (std::uint32_t s : even_labels(base.degree(v))) {
      roles.push_back({CfiVertexRole::Kind::Inner, v, 0, 0, s});
    }
  }
  return roles;
}

Graph cfi_graph(const Graph &base, std::span<const Edge> twisted) {
  check_base(base);
  for (const Edge &e : twisted) {
    if (e.v >= base.num_vertices() || !base.has_edge(e.u, e.v)) {
      throw InvalidParameter("twist_edge", "(" + std::to_string(e.u) + ", " +
                                               std::to_string(e.v) + ") is not a base edge");
    }
  }
  const Layout lay = make_layout(base);
  auto edge_end = [&](Vertex v, Vertex w, unsigned b) {
    return static_cast<Vertex>(lay.edge_offset[v] + 2 * incident_index(base, v, w) + b);
  };

  Graph g(lay.total);
  for (Vertex v = 0; v < base.num_vertices(); ++v) {
    const auto nb = base.neighbors(v);
    const auto labels = even_labels(nb.size());
    for (std::size_t j = 0; j < labels.size(); ++j) {
      const auto inner = static_cast<Vertex>(lay.inner_offset[v] + j);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        g.add_edge(inner, edge_end(v, nb[i], (labels[j] >> i) & 1U));
      }
    }
  }
  for (const Edge &e : base.edges()) {
    const bool cross = std::find(twisted.begin(), twisted.end(), e) != twisted.end();
    for (unsigned b = 0; b < 2; ++b) {
      g.add_edge(edge_end(e.u, e.v, b), edge_end(e.v, e.u, cross ? 1 - b : b));
    }
  }
  return g;
}

CfiPair build_cfi(const Graph &base, std::optional<Edge> twist_edge) {
  check_base(base);
  if (base.num_edges() == 0) throw Error(ErrorCode::IsolatedVertex, "cfi: base has no edges");
  const Edge twist = twist_edge.value_or(base.edges().front());
  CfiPair pair{base, cfi_graph(base, {}), cfi_graph(base, std::span<const Edge>(&twist, 1)),
               twist, cfi_roles(base)};
  return pair;
}

}  // namespace quic
