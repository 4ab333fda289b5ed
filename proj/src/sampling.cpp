#include "quic/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "quic/cut.hpp"
#include "quic/error.hpp"

namespace quic {

std::uint64_t CountsHistogram::total() const {
  std::uint64_t t = 0;
  for (const auto &[x, c] : counts) t += c;
  return t;
}

std::vector<double> CountsHistogram::dense_frequencies() const {
  if (num_qubits > 30) throw Error(ErrorCode::SizeCeiling, "dense_frequencies: register too wide");
  std::vector<double> f(std::size_t{1} << num_qubits, 0.0);
  const double t = static_cast<double>(total());
  if (t == 0) return f;
  for (const auto &[x, c] : counts) f[x] = static_cast<double>(c) / t;
  return f;
}

CountsHistogram sample_counts(std::span<const double> p, std::uint64_t shots, Rng &rng) {
  if (p.empty() || (p.size() & (p.size() - 1)) != 0) {
    throw Error(ErrorCode::LengthMismatch, "sample_counts: length must be a power of two");
  }
  double mass = 0.0;
  for (double v : p) {
    if (v < 0.0 || !std::isfinite(v)) {
      throw Error(ErrorCode::NegativeEntry, "sample_counts: negative or non-finite probability");
    }
    mass += v;
  }
  if (mass <= 0.0) throw InvalidParameter("p", "probabilities sum to zero");

  CountsHistogram h;
  while ((std::size_t{1} << h.num_qubits) < p.size()) ++h.num_qubits;

  std::size_t last = p.size();
  while (last > 0 && p[last - 1] == 0.0) --last;

  std::uint64_t remaining = shots;
  for (std::size_t x = 0; x < last && remaining > 0; ++x) {
    if (p[x] == 0.0) continue;
    std::uint64_t k = remaining;
    if (x + 1 < last) {
      const double q = std::clamp(p[x] / mass, 0.0, 1.0);
      std::binomial_distribution<std::uint64_t> binom(remaining, q);
      k = binom(rng);
    }
    mass -= p[x];
    if (mass < 0.0) mass = 0.0;
    if (k > 0) h.counts[x] = k;
    remaining -= k;
  }
  return h;
}

CountsHistogram sample_counts(std::span<const double> p, std::uint64_t shots, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return sample_counts(p, shots, rng);
}

// Outcomes are laid out by descending count, so a relabeling of outcomes
// leaves every block size in place and draws at a given seed pick the same
// positions.
ShotPool::ShotPool(const CountsHistogram &h) : num_qubits_(h.num_qubits) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> blocks(h.counts.begin(), h.counts.end());
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const auto &a, const auto &b) { return a.second > b.second; });
  shots_.reserve(h.total());
  for (const auto &[x, c] : blocks) shots_.insert(shots_.end(), c, x);
}

CountsHistogram ShotPool::draw(std::uint64_t m, Rng &rng) {
  if (m > shots_.size()) {
    throw Error(ErrorCode::InsufficientShots, "subsample of " + std::to_string(m) +
                                                  " from " + std::to_string(shots_.size()) +
                                                  " shots");
  }
  CountsHistogram out;
  out.num_qubits = num_qubits_;
  const std::uint64_t n = shots_.size();
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uniform_int_distribution<std::uint64_t> pick(i, n - 1);
    std::swap(shots_[i], shots_[pick(rng)]);
    ++out.counts[shots_[i]];
  }
  return out;
}

CountsHistogram subsample(const CountsHistogram &h, std::uint64_t m, std::uint64_t seed) {
  ShotPool pool(h);
  Rng rng = make_rng(seed);
  return pool.draw(m, rng);
}

std::string format_bits(std::uint64_t x, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n && i < 64; ++i) {
    if ((x >> i) & 1U) s[n - 1 - i] = '1';
  }
  return s;
}

nlohmann::json to_json(const CountsHistogram &h) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto &[x, c] : h.counts) j[format_bits(x, h.num_qubits)] = c;
  return j;
}

CountsHistogram counts_from_json(const nlohmann::json &j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "counts: expected an object");
  CountsHistogram h;
  bool first = true;
  for (const auto &[key, value] : j.items()) {
    if (key.size() > 64) throw Error(ErrorCode::Parse, "counts: bitstring wider than 64");
    if (first) {
      h.num_qubits = key.size();
      first = false;
    } else if (key.size() != h.num_qubits) {
      throw Error(ErrorCode::Parse, "counts: bitstrings of different widths");
    }
    std::vector<std::uint8_t> bits;
    try {
      bits = parse_bits(key);
    } catch (const Error &) {
      throw Error(ErrorCode::Parse, "counts: bad bitstring '" + key + "'");
    }
    if (!value.is_number_unsigned()) {
      throw Error(ErrorCode::Parse, "counts: count for '" + key + "' is not a non-negative integer");
    }
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) x |= std::uint64_t{bits[i]} << i;
    const auto c = value.get<std::uint64_t>();
    if (c > 0) h.counts[x] = c;
  }
  return h;
}

}  // namespace quic
