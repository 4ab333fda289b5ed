#pragma once

#include <cstdint>
#include <random>

namespace quic {

// All stochastic routines draw from std::mt19937_64 seeded explicitly by the
// caller. Independent streams are derived with splitmix64 so that a single
// experiment seed fans out into reproducible per-task seeds. Distributions are
// the standard library's, so results are reproducible within one binary, not
// across toolchains.
using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for sub-stream `stream` of `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

inline Rng make_rng(std::uint64_t seed) { return Rng{splitmix64(seed)}; }

}  // namespace quic
