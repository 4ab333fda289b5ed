#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "quic/graph.hpp"

namespace quic {

// Bit-index convention used everywhere in the library: qubit i is bit i of a
// basis-state index (little-endian). Vertex i of a graph drives qubit i.

namespace tolerance {
/// Agreement required between two evaluations of the same exact quantity.
inline constexpr double kExact = 1e-12;
/// Agreement required between independent computational routes.
inline constexpr double kCrossPath = 1e-9;
}  // namespace tolerance

/// Largest register the statevector engine will allocate by default
/// (2^26 amplitudes, 1 GiB).
inline constexpr std::size_t kDefaultQubitCeiling = 26;

/// Fixed circuit parameters. Angles are in radians.
struct CircuitParams {
  double theta_enc = 2.875;
  double theta_ent = 2.0;
  double theta_mix = 0.1;
  std::size_t reps = 2;

  static CircuitParams canonical() { return {}; }
  void validate() const;

  friend bool operator==(const CircuitParams &, const CircuitParams &) = default;
};

using Amplitude = std::complex<double>;

struct Statevector {
  std::size_t num_qubits = 0;
  std::vector<Amplitude> amplitudes;

  double norm() const;
};

Statevector zero_state(std::size_t num_qubits);

/// R_X(angle) = cos(angle/2) I - i sin(angle/2) X on one qubit.
void apply_rx(Statevector &sv, std::size_t qubit, double angle);
/// R_ZZ(angle) = exp(-i angle/2 Z Z): phase e^{-i angle/2} on equal bits and
/// e^{+i angle/2} on unequal bits.
void apply_rzz(Statevector &sv, std::size_t q1, std::size_t q2, double angle);
void apply_pauli(Statevector &sv, std::size_t qubit, int pauli);  // 1=X 2=Y 3=Z

/// phi_i = theta_enc * d_i / d_max, or all zeros when the graph has no edges.
std::vector<double> encoding_angles(const Graph &g, double theta_enc);

/// Degree-encoding layer applied to |0...0>.
Statevector encode(const Graph &g, double theta_enc,
                   std::size_t ceiling = kDefaultQubitCeiling);

/// Whole entangling layer as one diagonal pass: amplitude s picks up
/// exp(i theta cut(s)) exp(-i theta |E| / 2), which is the product of the
/// per-edge R_ZZ phases.
void apply_entangler(Statevector &sv, const Graph &g, double theta_ent);

/// Uniform mixer R_X(theta_mix) on every qubit.
void apply_mixer(Statevector &sv, double theta_mix);

/// U(G)|0...0> with U(G) = (U_mix U_ent)^reps U_enc.
Statevector run_circuit(const Graph &g, const CircuitParams &params,
                        std::size_t ceiling = kDefaultQubitCeiling);

/// Born probabilities |a_x|^2.
std::vector<double> output_distribution(const Statevector &sv);

/// Marginal over the qubits in `keep`. Output bit j corresponds to the j-th
/// smallest kept qubit; duplicates are ignored.
std::vector<double> marginalize(std::span<const double> p, std::span<const std::size_t> keep);

/// Closed form |<s|U_enc|0...0>| = prod_{s_i=0} cos(phi_i/2) prod_{s_i=1} sin(phi_i/2).
/// The product is over |cos| and |sin|, which matches the magnitude for
/// every angle.
double encoder_amplitude(const Graph &g, double theta_enc, std::span<const std::uint8_t> bits);
double encoder_amplitude(const Graph &g, double theta_enc, std::uint64_t s);

}  // namespace quic
