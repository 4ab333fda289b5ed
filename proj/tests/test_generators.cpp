#include <catch_amalgamated.hpp>

#include "quic/error.hpp"
#include "quic/generators.hpp"
#include "quic/isomorphism.hpp"

using namespace quic;

namespace {

// (n, k, lambda, mu) by direct neighborhood counting; lambda/mu are -1 when
// the graph is not strongly regular.
std::array<long, 4> srg_parameters(const Graph &g) {
  const std::size_t n = g.num_vertices();
  const long k = static_cast<long>(g.degree(0));
  long lambda = -2, mu = -2;
  for (Vertex u = 0; u < n; ++u) {
    if (static_cast<long>(g.degree(u)) != k) return {long(n), k, -1, -1};
    for (Vertex v = u + 1; v < n; ++v) {
      long common = 0;
      for (Vertex w : g.neighbors(u)) common += g.has_edge(w, v);
      long &slot = g.has_edge(u, v) ? lambda : mu;
      if (slot == -2) slot = common;
      if (slot != common) return {long(n), k, -1, -1};
    }
  }
  return {long(n), k, lambda, mu};
}

}  // namespace

TEST_CASE("deterministic families") {
  CHECK(path_graph(6).num_edges() == 5);
  CHECK(cycle_graph(7).degree_sequence() == std::vector<std::size_t>(7, 2));
  CHECK(complete_graph(5).num_edges() == 10);
  CHECK(complete_minus_edge(5).num_edges() == 9);
  CHECK(complete_bipartite(3, 4).num_edges() == 12);

  Graph pan = pan_graph(4);
  CHECK(pan.num_vertices() == 4);
  CHECK(pan.degree_sequence() == std::vector<std::size_t>{3, 2, 2, 1});

  Graph star = star_graph(4);
  CHECK(star.num_vertices() == 4);
  CHECK(star.degree(0) == 3);
}

TEST_CASE("broom(17, 2)") {
  Graph b = broom_graph(17, 2);
  CHECK(b.num_vertices() == 17);
  CHECK(b.num_edges() == 16);
  CHECK(b.degree(0) == 3);
  CHECK(b.degree(1) == 1);
  CHECK(b.degree(2) == 1);
  CHECK(b.has_edge(0, 3));
  for (Vertex v = 3; v < 16; ++v) CHECK(b.has_edge(v, v + 1));
  CHECK(b.degree(16) == 1);

  Graph variant = broom_graph(17, 2, true);
  CHECK(variant.num_edges() == 17);
  CHECK(variant.has_edge(1, 2));
}

TEST_CASE("named graphs match their definitions") {
  Graph petersen = named_graph("petersen");
  CHECK(petersen.num_vertices() == 10);
  CHECK(petersen.degree_sequence() == std::vector<std::size_t>(10, 3));
  CHECK(srg_parameters(petersen) == std::array<long, 4>{10, 3, 0, 1});

  Graph shrikhande = named_graph("shrikhande");
  CHECK(shrikhande.num_edges() == 48);
  CHECK(srg_parameters(shrikhande) == std::array<long, 4>{16, 6, 2, 2});
  CHECK(srg_parameters(named_graph("rook4x4")) == std::array<long, 4>{16, 6, 2, 2});

  CHECK(named_graph("q3").degree_sequence() == std::vector<std::size_t>(8, 3));
  CHECK(named_graph("lk24").degree_sequence() == std::vector<std::size_t>(8, 4));
  CHECK(named_graph("prism5").degree_sequence() == std::vector<std::size_t>(10, 3));
  CHECK(named_graph("c8_1_4").degree_sequence() == std::vector<std::size_t>(8, 3));
  CHECK(named_graph("c8_1_2").degree_sequence() == std::vector<std::size_t>(8, 4));

  CHECK_THROWS_AS(named_graph("nonesuch"), InvalidParameter);
}

TEST_CASE("partners of the strongly regular suite are non-isomorphic") {
  CHECK_FALSE(is_isomorphic(named_graph("shrikhande"), named_graph("rook4x4")));
  CHECK_FALSE(is_isomorphic(named_graph("petersen"), named_graph("prism5")));
  CHECK_FALSE(is_isomorphic(named_graph("q3"), named_graph("c8_1_4")));
  CHECK_FALSE(is_isomorphic(named_graph("lk24"), named_graph("c8_1_2")));
}

TEST_CASE("structured hard pairs are non-isomorphic twins") {
  for (std::size_t rungs : {6, 8, 9}) {
    Graph a = circular_ladder(rungs);
    Graph b = twisted_ladder(rungs);
    CHECK(a.degree_sequence() == b.degree_sequence());
    CHECK_FALSE(is_isomorphic(a, b));
  }
  Graph c1 = chorded_cycle(12, 3);
  Graph c2 = chorded_cycle(12, 5);
  CHECK(c1.degree_sequence() == c2.degree_sequence());
  CHECK_FALSE(is_isomorphic(c1, c2));

  Graph t1 = inscribed_triangle_cycle(12, 4);
  Graph t2 = inscribed_triangle_cycle(12, 6);
  CHECK(t1.degree_sequence() == t2.degree_sequence());
  CHECK_FALSE(is_isomorphic(t1, t2));
}

TEST_CASE("random families are seed reproducible") {
  CHECK(erdos_renyi(12, 0.35, 17) == erdos_renyi(12, 0.35, 17));
  CHECK(erdos_renyi(12, 0.35, 17) != erdos_renyi(12, 0.35, 18));
  CHECK(erdos_renyi(6, 0.0, 1).num_edges() == 0);
  CHECK(erdos_renyi(6, 1.0, 1).num_edges() == 15);

  Graph ba = barabasi_albert(20, 2, 5);
  CHECK(ba == barabasi_albert(20, 2, 5));
  CHECK(ba.num_edges() == 2 + 2 * 17);
  CHECK(ba.is_connected());
}

TEST_CASE("parameter validation names the field") {
  auto field_of = [](auto &&fn) {
    try {
      fn();
    } catch (const InvalidParameter &e) {
      return e.field();
    }
    return std::string("<none>");
  };
  CHECK(field_of([] { erdos_renyi(5, 1.5, 0); }) == "p");
  CHECK(field_of([] { barabasi_albert(4, 4, 0); }) == "k");
  CHECK(field_of([] { cycle_graph(2); }) == "n");
  CHECK(field_of([] { circulant_graph(8, {5}); }) == "jumps");
  CHECK(field_of([] { parse_family("er:12:abc"); }) == "p");
  CHECK(field_of([] { parse_family("bogus:3"); }) == "family");
}

TEST_CASE("family strings round trip") {
  for (const char *text : {"path:6", "er:12:0.35:7", "ba:10:2:3", "broom:17:2", "broom+:17:2",
                           "k:4", "k-e:4", "kb:3:4", "chorded:12:3", "triangles:12:5",
                           "ladder:6", "twisted:6", "circulant:8:1:4", "named:shrikhande"}) {
    auto spec = parse_family(text);
    CHECK(to_string(spec) == text);
    CHECK(generate(parse_family(to_string(spec))) == generate(spec));
  }
  CHECK(generate(parse_family("petersen")) == named_graph("petersen"));
  CHECK(generate(parse_family("star:4")) == star_graph(4));
}
