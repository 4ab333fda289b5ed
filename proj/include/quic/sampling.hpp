#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "quic/rng.hpp"

namespace quic {

/// Measurement outcomes of a `num_qubits` register. Keys are basis-state
/// indices with qubit i as bit i.
struct CountsHistogram {
  std::size_t num_qubits = 0;
  std::map<std::uint64_t, std::uint64_t> counts;

  std::uint64_t total() const;
  /// Relative frequencies as a dense vector of length 2^num_qubits.
  std::vector<double> dense_frequencies() const;

  friend bool operator==(const CountsHistogram &, const CountsHistogram &) = default;
};

/// Multinomial(shots, p) via sequential conditional binomials. `p` must be
/// non-negative with a positive sum; it is renormalized.
CountsHistogram sample_counts(std::span<const double> p, std::uint64_t shots, Rng &rng);
CountsHistogram sample_counts(std::span<const double> p, std::uint64_t shots, std::uint64_t seed);

/// Expanded shot list of a histogram, for repeated draws without replacement.
class ShotPool {
 public:
  explicit ShotPool(const CountsHistogram &h);

  std::uint64_t size() const noexcept { return shots_.size(); }
  /// `m` shots drawn uniformly without replacement (partial Fisher-Yates).
  CountsHistogram draw(std::uint64_t m, Rng &rng);

 private:
  std::size_t num_qubits_;
  std::vector<std::uint64_t> shots_;
};

/// One draw of `m` shots without replacement; InsufficientShots if m > total.
CountsHistogram subsample(const CountsHistogram &h, std::uint64_t m, std::uint64_t seed);

/// Renders outcome `x` as n characters with qubit 0 rightmost.
std::string format_bits(std::uint64_t x, std::size_t n);

/// {"bitstring": count, ...}
nlohmann::json to_json(const CountsHistogram &h);
/// Inverse of to_json. Register width is taken from the key length.
CountsHistogram counts_from_json(const nlohmann::json &j);

}  // namespace quic
