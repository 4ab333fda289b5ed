#include "quic/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "quic/error.hpp"
#include "quic/rng.hpp"

namespace quic {
namespace {

void require(bool ok, const char *field, const std::string &why) {
  if (!ok) throw InvalidParameter(field, why);
}

Vertex vx(std::size_t i) { return static_cast<Vertex>(i); }

}  // namespace

Graph path_graph(std::size_t n) {
  require(n >= 1, "n", "path needs at least 1 vertex");
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(vx(i), vx(i + 1));
  return g;
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "n", "cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(vx(n - 1), 0);
  return g;
}

Graph pan_graph(std::size_t n) {
  require(n >= 4, "n", "pan needs at least 4 vertices (triangle plus pendant)");
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(vx(i), vx((i + 1) % (n - 1)));
  g.add_edge(0, vx(n - 1));
  return g;
}

Graph star_graph(std::size_t n) {
  require(n >= 2, "n", "star needs at least 2 vertices");
  Graph g(n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(0, vx(i));
  return g;
}

Graph complete_graph(std::size_t n) {
  require(n >= 1, "n", "complete graph needs at least 1 vertex");
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(vx(i), vx(j));
  return g;
}

Graph complete_minus_edge(std::size_t n) {
  require(n >= 2, "n", "K_n - e needs at least 2 vertices");
  Graph g = complete_graph(n);
  g.remove_edge(0, 1);
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  require(a >= 1, "n", "bipartite part sizes must be positive");
  require(b >= 1, "k", "bipartite part sizes must be positive");
  Graph g(a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) g.add_edge(vx(i), vx(a + j));
  return g;
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  require(n >= 1, "n", "ER graph needs at least 1 vertex");
  require(std::isfinite(p) && p >= 0.0 && p <= 1.0, "p", "probability must lie in [0, 1]");
  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (unit(rng) < p) g.add_edge(vx(i), vx(j));
  return g;
}

// Preferential attachment seeded with a star on m + 1 vertices; each new
// vertex joins m distinct targets drawn proportionally to degree.
Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  require(m >= 1, "k", "attachment count must be >= 1");
  require(m < n, "k", "attachment count must be < n");
  Rng rng = make_rng(seed);
  Graph g(n);
  std::vector<Vertex> repeated;
  for (std::size_t i = 1; i <= m; ++i) {
    g.add_edge(0, vx(i));
    repeated.push_back(0);
    repeated.push_back(vx(i));
  }
  for (std::size_t source = m + 1; source < n; ++source) {
    std::vector<Vertex> targets;
    while (targets.size() < m) {
      std::uniform_int_distribution<std::size_t> pick(0, repeated.size() - 1);
      const Vertex t = repeated[pick(rng)];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (Vertex t : targets) {
      g.add_edge(vx(source), t);
      repeated.push_back(t);
      repeated.push_back(vx(source));
    }
  }
  return g;
}

// Vertex 0 is the centroid, 1..pendants are the pendants and the remaining
// vertices form a path hanging off the centroid.
Graph broom_graph(std::size_t n, std::size_t pendants, bool pendant_edge) {
  require(pendants >= 1, "k", "broom needs at least one pendant");
  require(n >= pendants + 2, "n", "broom needs a non-empty handle");
  require(!pendant_edge || pendants >= 2, "k", "pendant edge needs two pendants");
  Graph g(n);
  for (std::size_t i = 1; i <= pendants; ++i) g.add_edge(0, vx(i));
  g.add_edge(0, vx(pendants + 1));
  for (std::size_t i = pendants + 1; i + 1 < n; ++i) g.add_edge(vx(i), vx(i + 1));
  if (pendant_edge) g.add_edge(1, 2);
  return g;
}

Graph chorded_cycle(std::size_t n, std::size_t k) {
  require(n >= 4, "n", "chorded cycle needs at least 4 vertices");
  require(k >= 2 && k + 2 <= n, "k", "chord (0, k) must not coincide with a cycle edge");
  Graph g = cycle_graph(n);
  g.add_edge(0, vx(k));
  return g;
}

Graph inscribed_triangle_cycle(std::size_t n, std::size_t k) {
  require(n >= 6, "n", "inscribed-triangle cycle needs at least 6 vertices");
  require(k >= 1 && k + 2 <= n - 1, "k", "second chord (k, k+2) must fit without wrapping");
  Graph g = cycle_graph(n);
  g.add_edge(0, 2);
  require(g.add_edge(vx(k), vx(k + 2)), "k", "chords must be distinct");
  return g;
}

Graph circular_ladder(std::size_t rungs) {
  require(rungs >= 3, "n", "circular ladder needs at least 3 rungs");
  Graph g(2 * rungs);
  for (std::size_t i = 0; i < rungs; ++i) {
    g.add_edge(vx(i), vx((i + 1) % rungs));
    g.add_edge(vx(rungs + i), vx(rungs + (i + 1) % rungs));
    g.add_edge(vx(i), vx(rungs + i));
  }
  return g;
}

// Rungs (0, m) and (1, m + 1) are replaced by the crossed pair (0, m + 1) and
// (1, m).
Graph twisted_ladder(std::size_t rungs) {
  require(rungs >= 4, "n", "twisted ladder needs at least 4 rungs");
  Graph g = circular_ladder(rungs);
  const auto m = vx(rungs);
  g.remove_edge(0, m);
  g.remove_edge(1, m + 1);
  g.add_edge(0, m + 1);
  g.add_edge(1, m);
  return g;
}

Graph circulant_graph(std::size_t n, const std::vector<std::size_t> &jumps) {
  require(n >= 3, "n", "circulant needs at least 3 vertices");
  require(!jumps.empty(), "jumps", "circulant needs at least one jump");
  Graph g(n);
  for (std::size_t s : jumps) {
    require(s >= 1 && s <= n / 2, "jumps", "jump must lie in [1, n/2]");
    for (std::size_t i = 0; i < n; ++i) g.add_edge(vx(i), vx((i + s) % n));
  }
  return g;
}

Graph named_graph(std::string_view name) {
  if (name == "petersen") {
    Graph g(10);
    for (std::size_t i = 0; i < 5; ++i) {
      g.add_edge(vx(i), vx((i + 1) % 5));
      g.add_edge(vx(5 + i), vx(5 + (i + 2) % 5));
      g.add_edge(vx(i), vx(5 + i));
    }
    return g;
  }
  if (name == "shrikhande") {
    // Cayley graph of Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
    Graph g(16);
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = 0; b < 4; ++b) {
        const std::size_t steps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
        for (const auto &d : steps)
          g.add_edge(vx(a * 4 + b), vx(((a + d[0]) % 4) * 4 + (b + d[1]) % 4));
      }
    }
    return g;
  }
  if (name == "rook4x4") {
    Graph g(16);
    for (std::size_t u = 0; u < 16; ++u)
      for (std::size_t v = u + 1; v < 16; ++v)
        if (u / 4 == v / 4 || u % 4 == v % 4) g.add_edge(vx(u), vx(v));
    return g;
  }
  if (name == "q3") {
    Graph g(8);
    for (std::size_t u = 0; u < 8; ++u)
      for (std::size_t bit = 1; bit < 8; bit <<= 1)
        if ((u & bit) == 0) g.add_edge(vx(u), vx(u | bit));
    return g;
  }
  if (name == "lk24") {
    // Edge (i, j) of K_{2,4} is vertex 4i + j; edges sharing an endpoint meet.
    Graph g(8);
    for (std::size_t u = 0; u < 8; ++u)
      for (std::size_t v = u + 1; v < 8; ++v)
        if (u / 4 == v / 4 || u % 4 == v % 4) g.add_edge(vx(u), vx(v));
    return g;
  }
  if (name == "prism5") return circular_ladder(5);
  if (name == "c8_1_4") return circulant_graph(8, {1, 4});
  if (name == "c8_1_2") return circulant_graph(8, {1, 2});
  throw InvalidParameter("name", "unknown named graph '" + std::string(name) + "'");
}

Graph generate(const GraphFamilySpec &spec) {
  switch (spec.family) {
    case Family::Path: return path_graph(spec.n);
    case Family::Cycle: return cycle_graph(spec.n);
    case Family::Pan: return pan_graph(spec.n);
    case Family::Star: return star_graph(spec.n);
    case Family::Complete: return complete_graph(spec.n);
    case Family::CompleteMinusEdge: return complete_minus_edge(spec.n);
    case Family::CompleteBipartite: return complete_bipartite(spec.n, spec.k);
    case Family::ErdosRenyi: return erdos_renyi(spec.n, spec.p, spec.seed);
    case Family::BarabasiAlbert: return barabasi_albert(spec.n, spec.k, spec.seed);
    case Family::Broom: return broom_graph(spec.n, spec.k, spec.extra_edge);
    case Family::ChordedCycle: return chorded_cycle(spec.n, spec.k);
    case Family::InscribedTriangleCycle: return inscribed_triangle_cycle(spec.n, spec.k);
    case Family::CircularLadder: return circular_ladder(spec.n);
    case Family::TwistedLadder: return twisted_ladder(spec.n);
    case Family::Circulant: return circulant_graph(spec.n, spec.jumps);
    case Family::Named: return named_graph(spec.name);
  }
  throw InvalidParameter("family", "unknown family");
}

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::Path, "path"},
    {Family::Cycle, "cycle"},
    {Family::Pan, "pan"},
    {Family::Star, "star"},
    {Family::Complete, "k"},
    {Family::CompleteMinusEdge, "k-e"},
    {Family::CompleteBipartite, "kb"},
    {Family::ErdosRenyi, "er"},
    {Family::BarabasiAlbert, "ba"},
    {Family::Broom, "broom"},
    {Family::ChordedCycle, "chorded"},
    {Family::InscribedTriangleCycle, "triangles"},
    {Family::CircularLadder, "ladder"},
    {Family::TwistedLadder, "twisted"},
    {Family::Circulant, "circulant"},
    {Family::Named, "named"},
};

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view field, std::string_view text) {
  T value{};
  if constexpr (std::is_floating_point_v<T>) {
    try {
      std::size_t used = 0;
      value = static_cast<T>(std::stod(std::string(text), &used));
      if (used != text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception &) {
      throw InvalidParameter(std::string(field), "not a number: '" + std::string(text) + "'");
    }
  } else {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw InvalidParameter(std::string(field), "not an integer: '" + std::string(text) + "'");
    }
  }
  return value;
}

}  // namespace

GraphFamilySpec parse_family(std::string_view text) {
  auto parts = split(text, ':');
  GraphFamilySpec spec;
  std::string_view tag = parts[0];
  if (tag == "broom+") {
    spec.extra_edge = true;
    tag = "broom";
  }
  auto it = std::find_if(std::begin(kFamilyNames), std::end(kFamilyNames),
                         [&](const FamilyName &f) { return f.name == tag; });
  if (it == std::end(kFamilyNames)) {
    if (parts.size() == 1) {
      spec.family = Family::Named;
      spec.name = std::string(tag);
      named_graph(spec.name);
      return spec;
    }
    throw InvalidParameter("family", "unknown family '" + std::string(tag) + "'");
  }
  spec.family = it->family;
  auto arg = [&](std::size_t i, const char *field) -> std::string_view {
    if (i >= parts.size()) throw InvalidParameter(field, "missing in '" + std::string(text) + "'");
    return parts[i];
  };
  switch (spec.family) {
    case Family::Named:
      spec.name = std::string(arg(1, "name"));
      break;
    case Family::ErdosRenyi:
      spec.n = parse_number<std::size_t>("n", arg(1, "n"));
      spec.p = parse_number<double>("p", arg(2, "p"));
      if (parts.size() > 3) spec.seed = parse_number<std::uint64_t>("seed", parts[3]);
      break;
    case Family::BarabasiAlbert:
      spec.n = parse_number<std::size_t>("n", arg(1, "n"));
      spec.k = parse_number<std::size_t>("k", arg(2, "k"));
      if (parts.size() > 3) spec.seed = parse_number<std::uint64_t>("seed", parts[3]);
      break;
    case Family::Circulant:
      spec.n = parse_number<std::size_t>("n", arg(1, "n"));
      for (std::size_t i = 2; i < parts.size(); ++i)
        spec.jumps.push_back(parse_number<std::size_t>("jumps", parts[i]));
      break;
    case Family::CompleteBipartite:
    case Family::Broom:
    case Family::ChordedCycle:
    case Family::InscribedTriangleCycle:
      spec.n = parse_number<std::size_t>("n", arg(1, "n"));
      spec.k = parse_number<std::size_t>("k", arg(2, "k"));
      break;
    default:
      spec.n = parse_number<std::size_t>("n", arg(1, "n"));
      break;
  }
  return spec;
}

std::string to_string(const GraphFamilySpec &spec) {
  auto it = std::find_if(std::begin(kFamilyNames), std::end(kFamilyNames),
                         [&](const FamilyName &f) { return f.family == spec.family; });
  std::string out(it->name);
  auto num = [](auto v) { return std::to_string(v); };
  switch (spec.family) {
    case Family::Named: return out + ":" + spec.name;
    case Family::ErdosRenyi: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%g", spec.p);
      return out + ":" + num(spec.n) + ":" + buf + ":" + num(spec.seed);
    }
    case Family::BarabasiAlbert:
      return out + ":" + num(spec.n) + ":" + num(spec.k) + ":" + num(spec.seed);
    case Family::Circulant:
      out += ":" + num(spec.n);
      for (auto j : spec.jumps) out += ":" + num(j);
      return out;
    case Family::Broom:
      return (spec.extra_edge ? "broom+" : "broom") + (":" + num(spec.n)) + ":" + num(spec.k);
    case Family::CompleteBipartite:
    case Family::ChordedCycle:
    case Family::InscribedTriangleCycle:
      return out + ":" + num(spec.n) + ":" + num(spec.k);
    default: return out + ":" + num(spec.n);
  }
}

}  // namespace quic
