#include "quic/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace quic {
namespace {

using Colors = std::vector<std::uint32_t>;

std::size_t count_distinct(const Colors &a, const Colors &b) {
  Colors all(a);
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
}

// Refines both colorings with a shared signature table so color ids stay
// comparable across graphs. Returns false as soon as the per-color class
// sizes of g and h diverge.
bool refine_jointly(const Graph &g, const Graph &h, Colors &cg, Colors &ch) {
  auto histogram_matches = [&]() {
    std::map<std::uint32_t, std::int64_t> diff;
    for (auto c : cg) ++diff[c];
    for (auto c : ch) --diff[c];
    return std::all_of(diff.begin(), diff.end(), [](const auto &kv) { return kv.second == 0; });
  };
  if (!histogram_matches()) return false;
  std::size_t classes = count_distinct(cg, ch);
  std::vector<std::uint32_t> sig;
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> table;
    auto signatures = [&](const Graph &x, const Colors &cx) {
      std::vector<std::vector<std::uint32_t>> out(x.num_vertices());
      for (Vertex v = 0; v < x.num_vertices(); ++v) {
        sig.assign(1, cx[v]);
        for (Vertex u : x.neighbors(v)) sig.push_back(cx[u]);
        std::sort(sig.begin() + 1, sig.end());
        out[v] = sig;
        table.emplace(sig, 0);
      }
      return out;
    };
    auto sg = signatures(g, cg);
    auto sh = signatures(h, ch);
    std::uint32_t next = 0;
    for (auto &kv : table) kv.second = next++;
    for (Vertex v = 0; v < g.num_vertices(); ++v) cg[v] = table[sg[v]];
    for (Vertex v = 0; v < h.num_vertices(); ++v) ch[v] = table[sh[v]];
    if (!histogram_matches()) return false;
    const std::size_t now = count_distinct(cg, ch);
    if (now == classes) return true;
    classes = now;
  }
}

bool verify(const Graph &g, const Graph &h, const std::vector<Vertex> &map) {
  for (const Edge &e : g.edges()) {
    if (!h.has_edge(map[e.u], map[e.v])) return false;
  }
  return true;
}

bool search(const Graph &g, const Graph &h, Colors cg, Colors ch, std::vector<Vertex> &out) {
  if (!refine_jointly(g, h, cg, ch)) return false;
  const std::size_t n = g.num_vertices();

  std::map<std::uint32_t, std::size_t> class_size;
  for (auto c : cg) ++class_size[c];
  std::uint32_t target = 0;
  std::size_t best = 0;
  for (const auto &[c, size] : class_size) {
    if (size > 1 && (best == 0 || size < best)) {
      best = size;
      target = c;
    }
  }
  if (best == 0) {
    std::map<std::uint32_t, Vertex> where;
    for (Vertex w = 0; w < n; ++w) where[ch[w]] = w;
    out.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) out[v] = where.at(cg[v]);
    return verify(g, h, out);
  }

  const Vertex pick = static_cast<Vertex>(std::find(cg.begin(), cg.end(), target) - cg.begin());
  const std::uint32_t fresh =
      std::max(*std::max_element(cg.begin(), cg.end()), *std::max_element(ch.begin(), ch.end())) + 1;
  for (Vertex w = 0; w < n; ++w) {
    if (ch[w] != target) continue;
    Colors ng = cg;
    Colors nh = ch;
    ng[pick] = fresh;
    nh[w] = fresh;
    if (search(g, h, std::move(ng), std::move(nh), out)) return true;
  }
  return false;
}

Colors degree_colors(const Graph &g) {
  Colors c(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) c[v] = static_cast<std::uint32_t>(g.degree(v));
  return c;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph &g, const Graph &h) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return std::nullopt;
  if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
  if (g.num_vertices() == 0) return std::vector<Vertex>{};
  std::vector<Vertex> map;
  if (!search(g, h, degree_colors(g), degree_colors(h), map)) return std::nullopt;
  return map;
}

bool is_isomorphic(const Graph &g, const Graph &h) { return find_isomorphism(g, h).has_value(); }

std::vector<std::uint32_t> color_refinement(const Graph &g) {
  Colors a(g.num_vertices(), 0);
  Colors b(g.num_vertices(), 0);
  refine_jointly(g, g, a, b);
  return a;
}

bool wl1_equivalent(const Graph &g, const Graph &h) {
  if (g.num_vertices() != h.num_vertices()) return false;
  Colors cg(g.num_vertices(), 0);
  Colors ch(h.num_vertices(), 0);
  return refine_jointly(g, h, cg, ch);
}

}  // namespace quic
