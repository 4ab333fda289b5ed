#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "quic/sampling.hpp"

namespace quic {

/// How two histograms are compared inside the separation test.
enum class Alignment {
  Sorted,   // L1 between sorted, head-truncated frequency vectors
  Aligned,  // L1 between frequencies of identical bitstrings
};

struct SeparationConfig {
  std::uint64_t subsample = 4096;  // shots per subsample
  std::size_t repeats = 64;        // R
  std::size_t head = 100;          // k; 0 compares untruncated vectors
  std::uint64_t seed = 0;
  double threshold = 3.0;
  Alignment alignment = Alignment::Sorted;

  void validate() const;
};

struct SeparationReport {
  std::vector<double> null_l1;
  std::vector<double> signal_l1;
  double mu_null = 0.0;
  double mu_signal = 0.0;
  double sigma_pooled = 0.0;
  double z = 0.0;
  bool pass = false;
  /// Set when sigma_pooled == 0; z is then +inf (mu_signal > mu_null),
  /// -inf (mu_signal < mu_null) or 0 (equal means).
  bool degenerate = false;
  SeparationConfig config;
  std::uint64_t shots_a = 0;
  std::uint64_t shots_b = 0;
};

double mean(std::span<const double> xs);
/// Unbiased sample variance; 0 for fewer than two values.
double sample_variance(std::span<const double> xs);
/// q in [0, 100], linear interpolation between order statistics.
double percentile(std::vector<double> xs, double q);

/// Distance between two histograms under `alignment` and head length `k`.
double histogram_distance(const CountsHistogram &x, const CountsHistogram &y, Alignment alignment,
                          std::size_t head);

/// Subsampling z-test. Null pairs are two independent subsamples of one
/// histogram, alternating between `a` and `b`; signal pairs take one
/// subsample from each. z = (mu_signal - mu_null) / sqrt((s_null^2 + s_signal^2) / 2).
SeparationReport separation_test(const CountsHistogram &a, const CountsHistogram &b,
                                 const SeparationConfig &config);

/// Null distances of `repeats` subsample pairs drawn from `h`.
std::vector<double> null_distances(const CountsHistogram &h, const SeparationConfig &config);

/// q-th percentile of null_distances(h, config).
double null_percentile_threshold(const CountsHistogram &h, double q, const SeparationConfig &config);

nlohmann::json to_json(const SeparationConfig &config);
nlohmann::json to_json(const SeparationReport &report);

}  // namespace quic
