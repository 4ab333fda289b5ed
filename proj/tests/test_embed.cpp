#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "quic/circuit.hpp"
#include "quic/embed.hpp"
#include "quic/error.hpp"
#include "quic/generators.hpp"

using namespace quic;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<double> exact(const Graph &g, const CircuitParams &p = CircuitParams::canonical()) {
  return output_distribution(run_circuit(g, p));
}

}  // namespace

TEST_CASE("sorting") {
  std::vector<double> p{0.1, 0.7, 0.2};
  CHECK(sort_distribution(p).values == std::vector<double>{0.7, 0.2, 0.1});
  std::vector<double> u(4, 0.25);
  CHECK(sort_distribution(u).values == u);
  std::vector<double> q{0.2, 0.1, 0.7};
  CHECK(sort_distribution(q).values == sort_distribution(p).values);
  std::vector<double> neg{0.5, -0.5, 1.0};
  try {
    sort_distribution(neg);
    FAIL("expected throw");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NegativeEntry);
  }
}

TEST_CASE("head truncation pads with zeros") {
  std::vector<double> p(8, 0.125);
  auto d = sort_distribution(p, 3);
  auto t = truncate_head(d, 100);
  CHECK(t.values.size() == 100);
  CHECK(t.head_len == 100);
  CHECK(t.source_n == 3);
  CHECK(std::count(t.values.begin(), t.values.end(), 0.0) == 92);
  CHECK(truncate_head(d, 8).values == d.values);
  CHECK_THROWS_AS(truncate_head(d, 0), InvalidParameter);
}

TEST_CASE("sorted distances forget labels") {
  std::vector<double> a{1, 0, 0, 0};
  std::vector<double> b{0, 0, 1, 0};
  CHECK(l1_distance(embed_distribution(a), embed_distribution(b)) == 0.0);
  CHECK(aligned_l1(a, b) == 2.0);
  auto e = embed_distribution(exact(path_graph(4)));
  CHECK(l1_distance(e, e) == 0.0);
  CHECK(tv_distance(embed_distribution(a, 0), embed_distribution(std::vector<double>(4, 0.25), 0)) ==
        0.75);
}

TEST_CASE("length rules") {
  std::vector<double> a(4, 0.25), b(8, 0.125);
  CHECK_THROWS_AS(l1_distance(embed_distribution(a, 3), embed_distribution(b, 5)), Error);
  CHECK_THAT(l1_distance(embed_distribution(a, 0), embed_distribution(b, 0)),
             WithinAbs(1.0, 1e-15));
  CHECK_THROWS_AS(aligned_l1(a, b), Error);
}

TEST_CASE("embeddings are invariant under relabeling") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    Graph g = erdos_renyi(n, 0.5, rng());
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto a = embed_distribution(exact(g), 0);
    auto b = embed_distribution(exact(g.relabeled(perm)), 0);
    REQUIRE(l1_distance(a, b) < tolerance::kExact);
  }
}

TEST_CASE("broom label-aligned distance") {
  Graph base = broom_graph(17, 2);
  Graph variant = broom_graph(17, 2, true);
  const auto pa = exact(base);
  const auto pb = exact(variant);
  CHECK_THAT(aligned_l1(pa, pb), WithinAbs(1.2659992074678557, 1e-9));
  std::vector<std::size_t> keep{0, 1, 2};
  CHECK_THAT(aligned_l1(marginalize(pa, keep), marginalize(pb, keep)),
             WithinAbs(1.2659992074678594, 1e-9));
  CHECK(l1_distance(embed_distribution(pa, 0), embed_distribution(pb, 0)) < 1.0);
}

TEST_CASE("head truncation never increases the distance") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto a = embed_distribution(exact(erdos_renyi(9, 0.4, seed)), 0);
    auto b = embed_distribution(exact(erdos_renyi(9, 0.4, seed + 50)), 0);
    const double full = l1_distance(a, b);
    double last = 0.0;
    for (std::size_t k : {1, 10, 50, 100, 512}) {
      const double head = l1_distance(truncate_head(a, k), truncate_head(b, k));
      CHECK(head <= full + 1e-15);
      CHECK(head >= last);
      last = head;
    }
    CHECK_THAT(last, WithinAbs(full, 1e-15));
  }
}

TEST_CASE("sampled distances obey the triangle inequality") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto pg = exact(erdos_renyi(8, 0.4, seed));
    auto ph = exact(erdos_renyi(8, 0.4, seed + 100));
    auto g = embed_distribution(pg, 0), h = embed_distribution(ph, 0);
    auto gs = embed_counts(sample_counts(pg, 4096, seed), 0);
    auto hs = embed_counts(sample_counts(ph, 4096, seed + 1), 0);
    const double lhs = std::abs(l1_distance(gs, hs) - l1_distance(g, h));
    CHECK(lhs <= l1_distance(gs, g) + l1_distance(hs, h) + 1e-12);
  }
}

TEST_CASE("head mass of seeded ER(14, 0.3) graphs") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto d = embed_distribution(exact(erdos_renyi(14, 0.3, seed)), 100);
    const double mass = total_mass(d);
    CHECK(mass > 0.3);
    CHECK(mass < 0.7);
  }
}

TEST_CASE("counts embedding") {
  CountsHistogram h;
  h.num_qubits = 3;
  h.counts = {{0, 2}, {5, 6}};
  auto d = embed_counts(h, 4);
  CHECK(d.values == std::vector<double>{0.75, 0.25, 0.0, 0.0});
  CHECK(d.source_n == 3);
}

TEST_CASE("Poisson floor") {
  CHECK_THAT(poisson_floor(10000), WithinAbs(0.04, 1e-15));
  SortedDistribution d{{0.5, 0.3, 0.05, 0.01}, 0, 2};
  CHECK(resolvable_count(d, 10000) == 3);
  CHECK_THROWS_AS(poisson_floor(0), Error);
}

TEST_CASE("embedding json") {
  auto d = embed_graph(path_graph(3), CircuitParams::canonical(), 4);
  auto j = embedding_to_json(d, CircuitParams::canonical(), 0xabcULL);
  CHECK(j["k"] == 4);
  CHECK(j["n"] == 3);
  CHECK(j["values"].size() == 4);
  CHECK(j["graph_hash"] == "0000000000000abc");
  CHECK(params_from_json(j["params"]) == CircuitParams::canonical());
  CHECK_THROWS_AS(params_from_json(nlohmann::json{{"reps", 0}}), InvalidParameter);
}
