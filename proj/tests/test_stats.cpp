#include <catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "quic/circuit.hpp"
#include "quic/error.hpp"
#include "quic/generators.hpp"
#include "quic/stats.hpp"

using namespace quic;
using Catch::Matchers::WithinAbs;

namespace {

CountsHistogram point_mass(std::size_t n, std::uint64_t x, std::uint64_t shots) {
  CountsHistogram h;
  h.num_qubits = n;
  h.counts[x] = shots;
  return h;
}

CountsHistogram xor_relabel(const CountsHistogram &h, std::uint64_t mask) {
  CountsHistogram out;
  out.num_qubits = h.num_qubits;
  for (const auto &[x, c] : h.counts) out.counts[x ^ mask] = c;
  return out;
}

std::vector<double> exact(const Graph &g) {
  return output_distribution(run_circuit(g, CircuitParams::canonical()));
}

}  // namespace

TEST_CASE("moments and percentiles") {
  std::vector<double> xs{1, 2, 3, 4};
  CHECK(mean(xs) == 2.5);
  CHECK_THAT(sample_variance(xs), WithinAbs(5.0 / 3.0, 1e-15));
  CHECK(sample_variance(std::vector<double>{7}) == 0.0);
  CHECK(percentile(xs, 50) == 2.5);
  CHECK(percentile(xs, 0) == 1);
  CHECK(percentile(xs, 100) == 4);
  CHECK_THAT(percentile(xs, 95), WithinAbs(3.85, 1e-12));
  CHECK_THROWS_AS(percentile(xs, 101), InvalidParameter);
  CHECK_THROWS_AS(percentile({}, 50), InvalidParameter);
}

TEST_CASE("report fields are self-consistent") {
  auto pa = exact(erdos_renyi(8, 0.4, 1));
  auto pb = exact(erdos_renyi(8, 0.4, 2));
  auto a = sample_counts(pa, 1 << 15, 10);
  auto b = sample_counts(pb, 1 << 15, 11);
  SeparationConfig cfg;
  cfg.seed = 5;
  auto r = separation_test(a, b, cfg);
  REQUIRE(r.null_l1.size() == 64);
  REQUIRE(r.signal_l1.size() == 64);
  CHECK(r.mu_null == mean(r.null_l1));
  CHECK(r.mu_signal == mean(r.signal_l1));
  CHECK(r.sigma_pooled ==
        std::sqrt((sample_variance(r.null_l1) + sample_variance(r.signal_l1)) / 2.0));
  CHECK(r.z == (r.mu_signal - r.mu_null) / r.sigma_pooled);
  CHECK(r.pass == (r.z > r.config.threshold));
  CHECK_FALSE(r.degenerate);
  CHECK(r.shots_a == (1U << 15));
  CHECK(r.z > 3.0);

  auto again = separation_test(a, b, cfg);
  CHECK(again.null_l1 == r.null_l1);
  CHECK(again.signal_l1 == r.signal_l1);
}

TEST_CASE("a histogram against itself has no signal") {
  auto p = exact(erdos_renyi(9, 0.4, 3));
  auto a = sample_counts(p, 1 << 15, 1);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    SeparationConfig cfg;
    cfg.seed = seed;
    CHECK(std::abs(separation_test(a, a, cfg).z) < 1.0);
  }
}

TEST_CASE("isomorphic pairs are rarely flagged") {
  Graph k3 = complete_graph(3);
  std::vector<Vertex> perm{2, 0, 1};
  auto pa = exact(k3);
  auto pb = exact(k3.relabeled(perm));
  int flagged = 0;
  const int trials = 40;
  for (int s = 0; s < trials; ++s) {
    SeparationConfig cfg;
    cfg.seed = s;
    auto r = separation_test(sample_counts(pa, 1 << 15, 2 * s), sample_counts(pb, 1 << 15, 2 * s + 1),
                             cfg);
    flagged += std::abs(r.z) >= 3.0;
  }
  CHECK(flagged <= trials / 20);
}

TEST_CASE("z ignores outcome labels") {
  auto pa = exact(erdos_renyi(8, 0.4, 4));
  auto pb = exact(erdos_renyi(8, 0.4, 5));
  auto a = sample_counts(pa, 1 << 14, 1);
  auto b = sample_counts(pb, 1 << 14, 2);
  SeparationConfig cfg;
  cfg.seed = 9;
  auto r1 = separation_test(a, b, cfg);
  auto r2 = separation_test(xor_relabel(a, 0b10110101), xor_relabel(b, 0b00001111), cfg);
  CHECK(r1.z == r2.z);
  CHECK(r1.null_l1 == r2.null_l1);
}

TEST_CASE("larger gaps give larger z") {
  auto coin = [](double p1, std::uint64_t seed) {
    std::vector<double> p{1.0 - p1, p1};
    return sample_counts(p, 1 << 15, seed);
  };
  SeparationConfig cfg;
  cfg.head = 0;
  cfg.seed = 3;
  auto a = coin(0.5, 1);
  double last = -1e9;
  for (double p1 : {0.52, 0.55, 0.6, 0.7}) {
    const double z = separation_test(a, coin(p1, 2), cfg).z;
    CHECK(z > last);
    last = z;
  }
}

TEST_CASE("degenerate variance is flagged") {
  SeparationConfig cfg;
  cfg.subsample = 64;
  cfg.repeats = 8;
  auto a = point_mass(2, 0, 100);
  auto b = point_mass(2, 3, 100);
  auto sorted = separation_test(a, b, cfg);
  CHECK(sorted.degenerate);
  CHECK(sorted.z == 0.0);
  CHECK_FALSE(sorted.pass);

  cfg.alignment = Alignment::Aligned;
  auto aligned = separation_test(a, b, cfg);
  CHECK(aligned.degenerate);
  CHECK(std::isinf(aligned.z));
  CHECK(aligned.z > 0);
  CHECK(aligned.pass);
  CHECK(to_json(aligned)["z"] == "inf");
}

TEST_CASE("errors") {
  auto a = point_mass(2, 0, 100);
  SeparationConfig cfg;
  try {
    separation_test(a, a, cfg);
    FAIL("expected throw");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::InsufficientShots);
  }
  cfg.subsample = 10;
  cfg.repeats = 1;
  CHECK_THROWS_AS(separation_test(a, a, cfg), InvalidParameter);
  cfg.repeats = 4;
  cfg.alignment = Alignment::Aligned;
  CHECK_THROWS_AS(separation_test(a, point_mass(3, 0, 100), cfg), Error);
}

TEST_CASE("null percentile") {
  SeparationConfig cfg;
  cfg.subsample = 50;
  CHECK(null_percentile_threshold(point_mass(3, 5, 200), 95, cfg) == 0.0);

  std::vector<double> p(16, 1.0 / 16);
  auto h = sample_counts(p, 1 << 16, 4);
  cfg.subsample = 4096;
  cfg.head = 0;
  auto nulls = null_distances(h, cfg);
  CHECK(nulls.size() == 64);
  CHECK(null_percentile_threshold(h, 95, cfg) == percentile(nulls, 95));
  CHECK(null_percentile_threshold(h, 95, cfg) >= null_percentile_threshold(h, 50, cfg));
}

TEST_CASE("report json") {
  auto p = exact(path_graph(4));
  auto a = sample_counts(p, 5000, 1);
  SeparationConfig cfg;
  cfg.subsample = 1000;
  cfg.repeats = 4;
  auto j = to_json(separation_test(a, a, cfg));
  CHECK(j["null_l1"].size() == 4);
  CHECK(j["config"]["subsample"] == 1000);
  CHECK(j["config"]["alignment"] == "sorted");
  CHECK(j.contains("sigma_pooled"));
}
