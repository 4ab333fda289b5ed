#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "quic/circuit.hpp"
#include "quic/graph.hpp"
#include "quic/sampling.hpp"

namespace quic {

inline constexpr std::size_t kDefaultHead = 100;

/// A probability vector sorted non-increasing. `head_len` is the truncation
/// length, or 0 when the whole vector is kept.
struct SortedDistribution {
  std::vector<double> values;
  std::size_t head_len = 0;
  std::size_t source_n = 0;
};

/// Sorts `p` non-increasing. Throws NegativeEntry on a negative value.
SortedDistribution sort_distribution(std::span<const double> p, std::size_t source_n = 0);

/// Sorted relative frequencies of the observed outcomes.
SortedDistribution sort_counts(const CountsHistogram &h);

/// First k entries, zero-padded to exactly k.
SortedDistribution truncate_head(const SortedDistribution &d, std::size_t k);

/// sort + truncate; k = 0 keeps everything.
SortedDistribution embed_distribution(std::span<const double> p, std::size_t k = kDefaultHead);
SortedDistribution embed_counts(const CountsHistogram &h, std::size_t k = kDefaultHead);

/// Circuit output of `g`, sorted and truncated to k.
SortedDistribution embed_graph(const Graph &g, const CircuitParams &params,
                               std::size_t k = kDefaultHead);

/// L1 between sorted vectors. Truncated inputs must have equal length
/// (LengthMismatch otherwise); two untruncated inputs are zero-padded.
double l1_distance(const SortedDistribution &a, const SortedDistribution &b);
double tv_distance(const SortedDistribution &a, const SortedDistribution &b);

/// Label-aligned L1 between distributions over the same register.
double aligned_l1(std::span<const double> p, std::span<const double> q);
/// Label-aligned L1 between the empirical frequencies of two histograms.
double aligned_l1(const CountsHistogram &a, const CountsHistogram &b);

double total_mass(const SortedDistribution &d);

/// Smallest probability estimable to relative standard error `rel` from
/// `shots` shots: p >= 1 / (rel^2 shots).
double poisson_floor(std::uint64_t shots, double rel = 0.05);
/// Number of entries of `d` at or above the Poisson floor.
std::size_t resolvable_count(const SortedDistribution &d, std::uint64_t shots, double rel = 0.05);

nlohmann::json params_to_json(const CircuitParams &params);
CircuitParams params_from_json(const nlohmann::json &j);

/// {"values", "k", "n", "params", "graph_hash"}.
nlohmann::json embedding_to_json(const SortedDistribution &d, const CircuitParams &params,
                                 std::uint64_t graph_hash);

}  // namespace quic
