#include "quic/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quic/cut.hpp"
#include "quic/error.hpp"

namespace quic {

void CircuitParams::validate() const {
  if (!std::isfinite(theta_enc)) throw InvalidParameter("theta_enc", "must be finite");
  if (!std::isfinite(theta_ent)) throw InvalidParameter("theta_ent", "must be finite");
  if (!std::isfinite(theta_mix)) throw InvalidParameter("theta_mix", "must be finite");
  if (reps < 1) throw InvalidParameter("reps", "must be >= 1");
}

double Statevector::norm() const {
  double sum = 0.0;
  for (const auto &a : amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

Statevector zero_state(std::size_t num_qubits) {
  Statevector sv;
  sv.num_qubits = num_qubits;
  sv.amplitudes.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  sv.amplitudes[0] = 1.0;
  return sv;
}

void apply_rx(Statevector &sv, std::size_t qubit, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const std::size_t stride = std::size_t{1} << qubit;
  const std::size_t dim = sv.amplitudes.size();
  auto *amp = sv.amplitudes.data();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Amplitude a0 = amp[i];
      const Amplitude a1 = amp[i + stride];
      // -i s * a = (s * a.imag, -s * a.real)
      amp[i] = {c * a0.real() + s * a1.imag(), c * a0.imag() - s * a1.real()};
      amp[i + stride] = {c * a1.real() + s * a0.imag(), c * a1.imag() - s * a0.real()};
    }
  }
}

void apply_rzz(Statevector &sv, std::size_t q1, std::size_t q2, double angle) {
  const Amplitude same = std::polar(1.0, -angle / 2.0);
  const Amplitude diff = std::polar(1.0, angle / 2.0);
  for (std::size_t x = 0; x < sv.amplitudes.size(); ++x) {
    const bool unequal = ((x >> q1) ^ (x >> q2)) & 1U;
    sv.amplitudes[x] *= unequal ? diff : same;
  }
}

void apply_pauli(Statevector &sv, std::size_t qubit, int pauli) {
  const std::size_t bit = std::size_t{1} << qubit;
  auto &amp = sv.amplitudes;
  switch (pauli) {
    case 1:
      for (std::size_t x = 0; x < amp.size(); ++x)
        if (!(x & bit)) std::swap(amp[x], amp[x | bit]);
      break;
    case 2:
      // Y|0> = i|1>, Y|1> = -i|0>
      for (std::size_t x = 0; x < amp.size(); ++x) {
        if (x & bit) continue;
        const Amplitude a0 = amp[x];
        const Amplitude a1 = amp[x | bit];
        amp[x] = Amplitude{0.0, -1.0} * a1;
        amp[x | bit] = Amplitude{0.0, 1.0} * a0;
      }
      break;
    case 3:
      for (std::size_t x = 0; x < amp.size(); ++x)
        if (x & bit) amp[x] = -amp[x];
      break;
    default: break;
  }
}

std::vector<double> encoding_angles(const Graph &g, double theta_enc) {
  const std::size_t d_max = g.max_degree();
  std::vector<double> phi(g.num_vertices(), 0.0);
  if (d_max == 0) return phi;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    phi[v] = theta_enc * static_cast<double>(g.degree(v)) / static_cast<double>(d_max);
  }
  return phi;
}

namespace {

void check_ceiling(const Graph &g, std::size_t ceiling) {
  if (g.num_vertices() > ceiling) {
    throw Error(ErrorCode::SizeCeiling, "graph needs " + std::to_string(g.num_vertices()) +
                                            " qubits; simulator ceiling is " +
                                            std::to_string(ceiling));
  }
}

}  // namespace

Statevector encode(const Graph &g, double theta_enc, std::size_t ceiling) {
  check_ceiling(g, ceiling);
  Statevector sv = zero_state(g.num_vertices());
  const auto phi = encoding_angles(g, theta_enc);
  for (std::size_t q = 0; q < phi.size(); ++q) apply_rx(sv, q, phi[q]);
  return sv;
}

void apply_entangler(Statevector &sv, const Graph &g, double theta_ent) {
  if (sv.num_qubits != g.num_vertices()) {
    throw Error(ErrorCode::LengthMismatch, "entangler: register and graph sizes differ");
  }
  const auto cuts = all_cut_values(g);
  const double offset = static_cast<double>(g.num_edges()) / 2.0;
  std::vector<Amplitude> phase(g.num_edges() + 1);
  for (std::size_t c = 0; c < phase.size(); ++c) {
    phase[c] = std::polar(1.0, theta_ent * (static_cast<double>(c) - offset));
  }
  for (std::size_t x = 0; x < sv.amplitudes.size(); ++x) sv.amplitudes[x] *= phase[cuts[x]];
}

void apply_mixer(Statevector &sv, double theta_mix) {
  for (std::size_t q = 0; q < sv.num_qubits; ++q) apply_rx(sv, q, theta_mix);
}

Statevector run_circuit(const Graph &g, const CircuitParams &params, std::size_t ceiling) {
  params.validate();
  Statevector sv = encode(g, params.theta_enc, ceiling);
  const auto cuts = all_cut_values(g);
  const double offset = static_cast<double>(g.num_edges()) / 2.0;
  std::vector<Amplitude> phase(g.num_edges() + 1);
  for (std::size_t c = 0; c < phase.size(); ++c) {
    phase[c] = std::polar(1.0, params.theta_ent * (static_cast<double>(c) - offset));
  }
  for (std::size_t r = 0; r < params.reps; ++r) {
    for (std::size_t x = 0; x < sv.amplitudes.size(); ++x) sv.amplitudes[x] *= phase[cuts[x]];
    apply_mixer(sv, params.theta_mix);
  }
  return sv;
}

std::vector<double> output_distribution(const Statevector &sv) {
  std::vector<double> p(sv.amplitudes.size());
  std::transform(sv.amplitudes.begin(), sv.amplitudes.end(), p.begin(),
                 [](const Amplitude &a) { return std::norm(a); });
  return p;
}

std::vector<double> marginalize(std::span<const double> p, std::span<const std::size_t> keep) {
  if (p.empty() || (p.size() & (p.size() - 1)) != 0) {
    throw Error(ErrorCode::LengthMismatch, "marginalize: length must be a power of two");
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < p.size()) ++n;
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (std::size_t q : kept) {
    if (q >= n) {
      throw Error(ErrorCode::OutOfRange,
                  "marginalize: qubit " + std::to_string(q) + " >= " + std::to_string(n));
    }
  }
  std::vector<double> out(std::size_t{1} << kept.size(), 0.0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::size_t y = 0;
    for (std::size_t j = 0; j < kept.size(); ++j) y |= ((x >> kept[j]) & 1U) << j;
    out[y] += p[x];
  }
  return out;
}

double encoder_amplitude(const Graph &g, double theta_enc, std::span<const std::uint8_t> bits) {
  if (bits.size() != g.num_vertices()) {
    throw Error(ErrorCode::LengthMismatch, "encoder_amplitude: bitstring length " +
                                               std::to_string(bits.size()) + " != n");
  }
  const auto phi = encoding_angles(g, theta_enc);
  double amp = 1.0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    amp *= bits[i] ? std::abs(std::sin(phi[i] / 2.0)) : std::abs(std::cos(phi[i] / 2.0));
  }
  return amp;
}

double encoder_amplitude(const Graph &g, double theta_enc, std::uint64_t s) {
  if (g.num_vertices() > 64) throw Error(ErrorCode::OutOfRange, "mask form needs n <= 64");
  std::vector<std::uint8_t> bits(g.num_vertices());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = (s >> i) & 1U;
  return encoder_amplitude(g, theta_enc, bits);
}

}  // namespace quic
