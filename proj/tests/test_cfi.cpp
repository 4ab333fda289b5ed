#include <catch_amalgamated.hpp>

#include <algorithm>
#include <bit>

#include "quic/cfi.hpp"
#include "quic/error.hpp"
#include "quic/generators.hpp"
#include "quic/isomorphism.hpp"

using namespace quic;

TEST_CASE("sizes match the published table") {
  for (std::size_t n = 3; n <= 12; ++n) CHECK(cfi_size(path_graph(n)) == 6 * n - 6);
  CHECK(cfi_size(path_graph(3)) == 12);
  CHECK(cfi_size(path_graph(12)) == 66);
  for (std::size_t n = 4; n <= 11; ++n) CHECK(cfi_size(cycle_graph(n)) == 6 * n);
  CHECK(cfi_size(complete_graph(3)) == 18);
  CHECK(cfi_size(complete_minus_edge(4)) == 32);
  CHECK(cfi_size(complete_graph(4)) == 40);
  CHECK(cfi_size(complete_minus_edge(5)) == 68);
  CHECK(cfi_size(complete_graph(5)) == 80);
  CHECK(cfi_size(complete_bipartite(2, 3)) == 38);
  CHECK(cfi_size(complete_bipartite(2, 4)) == 56);
  CHECK(cfi_size(complete_bipartite(3, 3)) == 60);
  CHECK(cfi_size(complete_bipartite(3, 4)) == 88);
  CHECK(cfi_size(pan_graph(4)) == 25);
  CHECK(cfi_size(star_graph(4)) == 19);
}

TEST_CASE("built graphs have the formula size") {
  for (const Graph &base : {path_graph(3), complete_graph(4), complete_bipartite(3, 4),
                            cycle_graph(5), star_graph(5)}) {
    CfiPair pair = build_cfi(base);
    CHECK(pair.untwisted.num_vertices() == cfi_size(base));
    CHECK(pair.twisted.num_vertices() == cfi_size(base));
    CHECK(pair.roles.size() == cfi_size(base));
  }
}

TEST_CASE("P3 pair is non-isomorphic and split by refinement at the leaves") {
  CfiPair pair = build_cfi(path_graph(3));
  CHECK(pair.twist_edge == Edge(0, 1));
  CHECK_FALSE(is_isomorphic(pair.untwisted, pair.twisted));
  CHECK_FALSE(wl1_equivalent(pair.untwisted, pair.twisted));
  CHECK(pair.untwisted.degree_sequence() == pair.twisted.degree_sequence());
}

TEST_CASE("K3 and C4 pairs are non-isomorphic") {
  for (const Graph &base : {complete_graph(3), cycle_graph(4)}) {
    CfiPair pair = build_cfi(base);
    CHECK_FALSE(is_isomorphic(pair.untwisted, pair.twisted));
    CHECK(wl1_equivalent(pair.untwisted, pair.twisted));
  }
}

TEST_CASE("twisting a different edge gives the same class") {
  for (const Graph &base : {path_graph(3), complete_graph(3), cycle_graph(4)}) {
    const Graph reference = build_cfi(base).twisted;
    for (const Edge &e : base.edges()) {
      CfiPair pair = build_cfi(base, e);
      CHECK(pair.twist_edge == e);
      CHECK(is_isomorphic(pair.twisted, reference));
    }
  }
}

TEST_CASE("twisting two edges restores the untwisted class") {
  Graph base = cycle_graph(4);
  std::vector<Edge> two{base.edges()[0], base.edges()[2]};
  CHECK(is_isomorphic(cfi_graph(base, two), build_cfi(base).untwisted));
}

TEST_CASE("twisted and untwisted differ only in the crossed bridges") {
  Graph base = complete_graph(4);
  CfiPair pair = build_cfi(base, Edge(1, 3));
  const auto &a = pair.untwisted.edges();
  const auto &b = pair.twisted.edges();
  std::vector<Edge> only_a, only_b;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
  REQUIRE(only_a.size() == 2);
  REQUIRE(only_b.size() == 2);
  for (const Edge &e : only_a) {
    const auto &ru = pair.roles[e.u];
    const auto &rv = pair.roles[e.v];
    CHECK(ru.kind == CfiVertexRole::Kind::EdgeEnd);
    CHECK(rv.kind == CfiVertexRole::Kind::EdgeEnd);
    CHECK(ru.bit == rv.bit);
    CHECK(Edge(ru.base, rv.base) == Edge(1, 3));
  }
  for (const Edge &e : only_b) CHECK(pair.roles[e.u].bit != pair.roles[e.v].bit);
}

TEST_CASE("vertex roles follow the documented numbering") {
  Graph base = path_graph(3);
  auto roles = cfi_roles(base);
  REQUIRE(roles.size() == 12);
  // Edge ends: vertex 0 -> (1,b0),(1,b1); vertex 1 -> (0,*),(2,*); vertex 2 -> (1,*).
  const Vertex expected_nb[] = {1, 1, 0, 0, 2, 2, 1, 1};
  const Vertex expected_base[] = {0, 0, 1, 1, 1, 1, 2, 2};
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(roles[i].kind == CfiVertexRole::Kind::EdgeEnd);
    CHECK(roles[i].base == expected_base[i]);
    CHECK(roles[i].neighbor == expected_nb[i]);
    CHECK(roles[i].bit == i % 2);
  }
  const Vertex inner_base[] = {0, 1, 1, 2};
  const std::uint32_t inner_label[] = {0, 0, 3, 0};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(roles[8 + i].kind == CfiVertexRole::Kind::Inner);
    CHECK(roles[8 + i].base == inner_base[i]);
    CHECK(roles[8 + i].subset == inner_label[i]);
  }
}

TEST_CASE("inner labels have even weight and attach by bit") {
  Graph base = complete_bipartite(2, 3);
  CfiPair pair = build_cfi(base);
  for (Vertex x = 0; x < pair.roles.size(); ++x) {
    const auto &r = pair.roles[x];
    if (r.kind != CfiVertexRole::Kind::Inner) continue;
    CHECK(std::popcount(r.subset) % 2 == 0);
    const auto nb = base.neighbors(r.base);
    CHECK(pair.untwisted.degree(x) == nb.size());
    for (Vertex y : pair.untwisted.neighbors(x)) {
      const auto &ry = pair.roles[y];
      REQUIRE(ry.kind == CfiVertexRole::Kind::EdgeEnd);
      REQUIRE(ry.base == r.base);
      const auto i = std::find(nb.begin(), nb.end(), ry.neighbor) - nb.begin();
      CHECK(ry.bit == ((r.subset >> i) & 1U));
    }
  }
}

TEST_CASE("invalid bases are rejected") {
  auto code_of = [](const Graph &g) {
    try {
      build_cfi(g);
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::Parse;
  };
  CHECK(code_of(Graph(4, {{0, 1}, {2, 3}})) == ErrorCode::DisconnectedBase);
  CHECK(code_of(Graph(3, {{0, 1}})) == ErrorCode::IsolatedVertex);
  CHECK(code_of(Graph(1)) == ErrorCode::IsolatedVertex);
  CHECK_THROWS_AS(cfi_size(Graph(1)), Error);
  CHECK_THROWS_AS(build_cfi(path_graph(3), Edge(0, 2)), InvalidParameter);
}
