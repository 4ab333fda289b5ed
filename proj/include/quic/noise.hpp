#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "quic/circuit.hpp"
#include "quic/graph.hpp"
#include "quic/sampling.hpp"

namespace quic {

/// Depolarizing-plus-readout channel. p1 acts after every encoding and
/// mixer rotation, p2 after every entangling R_ZZ, p_ro flips each measured
/// bit independently. A depolarizing event inserts a uniformly random
/// non-identity Pauli on the touched qubits.
struct NoiseSpec {
  double p1 = 0.0;
  double p2 = 0.0;
  double p_ro = 0.0;

  void validate() const;
  bool is_noiseless() const { return p1 == 0.0 && p2 == 0.0 && p_ro == 0.0; }

  friend bool operator==(const NoiseSpec &, const NoiseSpec &) = default;
};

nlohmann::json to_json(const NoiseSpec &noise);
NoiseSpec noise_from_json(const nlohmann::json &j);

/// A Pauli inserted after gate `gate` of the fixed gate schedule. For
/// single-qubit gates `pauli` is 1..3 (X, Y, Z); for R_ZZ on (u, v) it is
/// 1..15 with the low two bits acting on u and the high two on v.
struct PauliFault {
  std::uint32_t gate = 0;
  std::uint8_t pauli = 0;
};

/// Number of gates in the schedule: n encoders, then per repetition one
/// R_ZZ per edge (sorted edge order) followed by n mixers.
std::size_t schedule_length(const Graph &g, const CircuitParams &params);

/// Draws the faults of one trajectory. Each gate consumes the same random
/// numbers whatever the probabilities, so one seed yields nested fault sets
/// as p1 or p2 grows and identical fault sets on graphs with equal n and |E|.
std::vector<PauliFault> draw_faults(const Graph &g, const CircuitParams &params,
                                    const NoiseSpec &noise, Rng &rng);

/// Gate-by-gate evolution with the given faults inserted.
Statevector run_trajectory(const Graph &g, const CircuitParams &params,
                           std::span<const PauliFault> faults,
                           std::size_t ceiling = kDefaultQubitCeiling);

/// Exact bit-flip readout channel applied to a distribution in place.
void apply_readout_channel(std::vector<double> &p, double p_ro);

/// Trajectory average of the pre-readout distribution followed by the exact
/// readout channel. Trajectory t draws from stream derive_seed(seed, t).
std::vector<double> expected_noisy_distribution(const Graph &g, const CircuitParams &params,
                                                const NoiseSpec &noise, std::size_t trajectories,
                                                std::uint64_t seed);

/// Finite-shot noisy measurement. Shots are split evenly over `trajectories`
/// (0 picks min(shots, 2048)); readout flips are applied per shot and bit.
/// A noiseless spec returns sample_counts(output_distribution(run_circuit(g,
/// params)), shots, seed) exactly.
CountsHistogram run_noisy(const Graph &g, const CircuitParams &params, const NoiseSpec &noise,
                          std::uint64_t shots, std::uint64_t seed, std::size_t trajectories = 0);

}  // namespace quic
