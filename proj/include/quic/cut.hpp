#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "quic/graph.hpp"

namespace quic {

/// Number of edges whose endpoints fall on opposite sides of `s`
/// (bit i of `s` is the side of vertex i). Requires n <= 64.
std::uint32_t cut_value(const Graph &g, std::uint64_t s);

/// Same, for an explicit 0/1 vector of length n (any n).
std::uint32_t cut_value(const Graph &g, std::span<const std::uint8_t> bits);

/// Cut value of every bitstring 0..2^n-1, built incrementally in O(2^n).
std::vector<std::uint32_t> all_cut_values(const Graph &g);

/// Parses a bitstring written with qubit 0 as the rightmost character.
std::vector<std::uint8_t> parse_bits(std::string_view text);

using CutOracle = std::function<std::int64_t(std::uint64_t)>;

/// Recovers the unique edge set consistent with `cut_oracle` on n vertices by
/// reading the coefficient of s_u s_v off the multilinear expansion:
/// cut(e_u) + cut(e_v) - cut(e_u + e_v) is 2 for an edge and 0 otherwise.
/// Only bitstrings of weight <= 2 are queried.
Graph reconstruct_from_cuts(std::size_t n, const CutOracle &cut_oracle);

}  // namespace quic
