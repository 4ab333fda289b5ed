#include "quic/noise.hpp"

#include <algorithm>
#include <cmath>

#include "quic/error.hpp"

namespace quic {

void NoiseSpec::validate() const {
  auto check = [](double p, const char *field) {
    if (!(p >= 0.0 && p < 1.0)) throw InvalidParameter(field, "probability must lie in [0, 1)");
  };
  check(p1, "p1");
  check(p2, "p2");
  check(p_ro, "p_ro");
}

nlohmann::json to_json(const NoiseSpec &noise) {
  return {{"p1", noise.p1}, {"p2", noise.p2}, {"p_ro", noise.p_ro}};
}

NoiseSpec noise_from_json(const nlohmann::json &j) {
  NoiseSpec n;
  try {
    n.p1 = j.value("p1", 0.0);
    n.p2 = j.value("p2", 0.0);
    n.p_ro = j.value("p_ro", 0.0);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::Parse, std::string("noise spec: ") + e.what());
  }
  n.validate();
  return n;
}

std::size_t schedule_length(const Graph &g, const CircuitParams &params) {
  return g.num_vertices() + params.reps * (g.num_edges() + g.num_vertices());
}

namespace {

// Gate index -> (is two-qubit, qubit a, qubit b).
struct GateRef {
  bool two_qubit;
  std::size_t a;
  std::size_t b;
};

GateRef locate(const Graph &g, std::size_t gate) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  if (gate < n) return {false, gate, 0};
  const std::size_t r = (gate - n) % (m + n);
  if (r < m) return {true, g.edges()[r].u, g.edges()[r].v};
  return {false, r - m, 0};
}

void apply_fault(Statevector &sv, const GateRef &ref, std::uint8_t pauli) {
  if (!ref.two_qubit) {
    apply_pauli(sv, ref.a, pauli);
    return;
  }
  apply_pauli(sv, ref.a, pauli & 3);
  apply_pauli(sv, ref.b, (pauli >> 2) & 3);
}

}  // namespace

std::vector<PauliFault> draw_faults(const Graph &g, const CircuitParams &params,
                                    const NoiseSpec &noise, Rng &rng) {
  std::vector<PauliFault> faults;
  const std::size_t total = schedule_length(g, params);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> one(1, 3);
  std::uniform_int_distribution<int> two(1, 15);
  for (std::size_t gate = 0; gate < total; ++gate) {
    const GateRef ref = locate(g, gate);
    const double u = unit(rng);
    const int pauli = ref.two_qubit ? two(rng) : one(rng);
    if (u < (ref.two_qubit ? noise.p2 : noise.p1)) {
      faults.push_back({static_cast<std::uint32_t>(gate), static_cast<std::uint8_t>(pauli)});
    }
  }
  return faults;
}

Statevector run_trajectory(const Graph &g, const CircuitParams &params,
                           std::span<const PauliFault> faults, std::size_t ceiling) {
  params.validate();
  if (g.num_vertices() > ceiling) {
    throw Error(ErrorCode::SizeCeiling, "trajectory exceeds simulator ceiling");
  }
  const std::size_t n = g.num_vertices();
  const auto phi = encoding_angles(g, params.theta_enc);
  Statevector sv = zero_state(n);
  std::size_t next = 0;
  auto after = [&](std::size_t gate) {
    while (next < faults.size() && faults[next].gate == gate) {
      apply_fault(sv, locate(g, gate), faults[next].pauli);
      ++next;
    }
  };
  std::size_t gate = 0;
  for (std::size_t q = 0; q < n; ++q, ++gate) {
    apply_rx(sv, q, phi[q]);
    after(gate);
  }
  for (std::size_t r = 0; r < params.reps; ++r) {
    for (const Edge &e : g.edges()) {
      apply_rzz(sv, e.u, e.v, params.theta_ent);
      after(gate++);
    }
    for (std::size_t q = 0; q < n; ++q) {
      apply_rx(sv, q, params.theta_mix);
      after(gate++);
    }
  }
  return sv;
}

void apply_readout_channel(std::vector<double> &p, double p_ro) {
  if (p_ro == 0.0) return;
  for (std::size_t bit = 1; bit < p.size(); bit <<= 1) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (x & bit) continue;
      const double a = p[x];
      const double b = p[x | bit];
      p[x] = (1.0 - p_ro) * a + p_ro * b;
      p[x | bit] = (1.0 - p_ro) * b + p_ro * a;
    }
  }
}

std::vector<double> expected_noisy_distribution(const Graph &g, const CircuitParams &params,
                                                const NoiseSpec &noise, std::size_t trajectories,
                                                std::uint64_t seed) {
  noise.validate();
  if (trajectories == 0) throw InvalidParameter("trajectories", "must be >= 1");
  const auto clean = output_distribution(run_circuit(g, params));
  if (noise.is_noiseless()) return clean;
  std::vector<double> acc(clean.size(), 0.0);
  std::size_t clean_count = 0;
  for (std::size_t t = 0; t < trajectories; ++t) {
    Rng rng = make_rng(derive_seed(seed, t));
    const auto faults = draw_faults(g, params, noise, rng);
    if (faults.empty()) {
      ++clean_count;
      continue;
    }
    const auto p = output_distribution(run_trajectory(g, params, faults));
    for (std::size_t x = 0; x < acc.size(); ++x) acc[x] += p[x];
  }
  for (std::size_t x = 0; x < acc.size(); ++x) {
    acc[x] = (acc[x] + static_cast<double>(clean_count) * clean[x]) /
             static_cast<double>(trajectories);
  }
  apply_readout_channel(acc, noise.p_ro);
  return acc;
}

CountsHistogram run_noisy(const Graph &g, const CircuitParams &params, const NoiseSpec &noise,
                          std::uint64_t shots, std::uint64_t seed, std::size_t trajectories) {
  noise.validate();
  const auto clean = output_distribution(run_circuit(g, params));
  if (noise.is_noiseless()) return sample_counts(clean, shots, seed);

  const std::size_t traj =
      trajectories == 0 ? static_cast<std::size_t>(std::min<std::uint64_t>(shots, 2048))
                        : trajectories;
  CountsHistogram out;
  out.num_qubits = g.num_vertices();
  if (shots == 0) return out;

  auto merge = [&out](const CountsHistogram &h) {
    for (const auto &[x, c] : h.counts) out.counts[x] += c;
  };

  std::uint64_t clean_shots = 0;
  for (std::size_t t = 0; t < traj; ++t) {
    const std::uint64_t share = shots / traj + (t < shots % traj ? 1 : 0);
    if (share == 0) continue;
    Rng rng = make_rng(derive_seed(seed, t));
    const auto faults = draw_faults(g, params, noise, rng);
    if (faults.empty()) {
      clean_shots += share;
      continue;
    }
    merge(sample_counts(output_distribution(run_trajectory(g, params, faults)), share, rng));
  }
  if (clean_shots > 0) merge(sample_counts(clean, clean_shots, derive_seed(seed, traj)));

  if (noise.p_ro > 0.0) {
    Rng rng = make_rng(derive_seed(seed, traj + 1));
    std::bernoulli_distribution flip(noise.p_ro);
    CountsHistogram flipped;
    flipped.num_qubits = out.num_qubits;
    for (const auto &[x, c] : out.counts) {
      for (std::uint64_t s = 0; s < c; ++s) {
        std::uint64_t y = x;
        for (std::size_t q = 0; q < out.num_qubits; ++q) {
          if (flip(rng)) y ^= std::uint64_t{1} << q;
        }
        ++flipped.counts[y];
      }
    }
    out = std::move(flipped);
  }
  return out;
}

}  // namespace quic
