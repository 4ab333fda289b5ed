// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>

#include "quic/cfi.hpp"
#include "quic/cut.hpp"
#include "quic/embed.hpp"
#include "quic/harness.hpp"
#include "quic/isomorphism.hpp"
#include "reference_sim.hpp"

using namespace quic;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string &detail, double seconds) {
  std::printf("%s criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, detail.c_str(), seconds);
  std::fflush(stdout);
  failures += !ok;
}

std::string fmt(const char *f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::vector<double> exact(const Graph &g, const CircuitParams &p = CircuitParams::canonical()) {
  return output_distribution(run_circuit(g, p));
}

Graph random_graph(std::mt19937_64 &rng, std::size_t lo, std::size_t hi) {
  const std::size_t n = lo + rng() % (hi - lo + 1);
  const double p = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
  return erdos_renyi(n, p, rng());
}

template <typename F>
void timed(int id, F &&body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  const bool ok = body(detail);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(id, ok, detail, s);
}

bool permutation_invariance(std::string &detail) {
  std::mt19937_64 rng(1);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_graph(rng, 2, 10);
    std::vector<Vertex> perm(g.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    worst = std::max(worst, l1_distance(embed_distribution(exact(g), 0),
                                        embed_distribution(exact(g.relabeled(perm)), 0)));
  }
  detail = "200 relabelings, max sorted l1 " + fmt("%.3e", worst);
  return worst < tolerance::kExact;
}

bool completeness(std::string &detail) {
  ExhaustiveOptions opt;
  opt.max_n = 6;
  opt.shots_max_n = 0;
  const auto r = run_validate_exhaustive(opt);
  std::size_t pairs = r.cross_pairs, separated = r.cross_separated;
  double min_l1 = r.cross_min_l1, control = 0.0;
  for (const auto &l : r.levels) {
    pairs += l.pairs;
    separated += l.separated_exact;
    if (l.pairs > 0) min_l1 = std::min(min_l1, l.min_exact_l1);
    control = std::max(control, l.control_max_l1);
  }
  detail = std::to_string(separated) + "/" + std::to_string(pairs) +
           " non-isomorphic pairs separated, min l1 " + fmt("%.3e", min_l1) +
           ", control max l1 " + fmt("%.3e", control);
  return separated == pairs && control < tolerance::kExact;
}

bool cut_reconstruction(std::string &detail) {
  std::size_t checked = 0, ok = 0;
  auto check = [&](const Graph &g) {
    const Graph back = reconstruct_from_cuts(
        g.num_vertices(), [&g](std::uint64_t s) { return std::int64_t(cut_value(g, s)); });
    ++checked;
    ok += back == g;
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if ((mask >> i) & 1U) edges.push_back(slots[i]);
      }
      check(Graph(n, edges));
    }
  }
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) check(random_graph(rng, 1, 8));
  detail = std::to_string(ok) + "/" + std::to_string(checked) + " labeled graphs round-trip";
  return ok == checked;
}

bool cfi_sizes(std::string &detail) {
  struct Row {
    Graph base;
    std::size_t size;
  };
  std::vector<Row> rows;
  for (std::size_t n = 3; n <= 12; ++n) rows.push_back({path_graph(n), 6 * n - 6});
  for (std::size_t n = 4; n <= 11; ++n) rows.push_back({cycle_graph(n), 6 * n});
  rows.push_back({complete_graph(3), 18});
  rows.push_back({complete_minus_edge(4), 32});
  rows.push_back({complete_graph(4), 40});
  rows.push_back({complete_minus_edge(5), 68});
  rows.push_back({complete_graph(5), 80});
  rows.push_back({complete_bipartite(2, 3), 38});
  rows.push_back({complete_bipartite(2, 4), 56});
  rows.push_back({complete_bipartite(3, 3), 60});
  rows.push_back({complete_bipartite(3, 4), 88});
  std::size_t ok = 0;
  for (const auto &r : rows) {
    const auto pair = build_cfi(r.base);
    ok += cfi_size(r.base) == r.size && pair.untwisted.num_vertices() == r.size &&
          pair.twisted.num_vertices() == r.size;
  }
  detail = std::to_string(ok) + "/" + std::to_string(rows.size()) + " table rows match";
  return ok == rows.size();
}

bool cfi_separation(std::string &detail) {
  bool ok = true;
  SamplingConfig s;  // 2^15 shots, m = 2^12, R = 64, k = 100
  std::uint64_t seed = 50;
  for (const auto &[name, base] : {std::pair{"P3", path_graph(3)}, std::pair{"K3", complete_graph(3)}}) {
    const auto pair = build_cfi(base);
    const bool noniso = !is_isomorphic(pair.untwisted, pair.twisted);
    ok = ok && noniso;
    detail += std::string(name) + (noniso ? " non-isomorphic" : " ISOMORPHIC");
    for (std::size_t r : {1, 2}) {
      CircuitParams p = CircuitParams::canonical();
      p.reps = r;
      const auto res = compare_graphs(pair.untwisted, pair.twisted, p, s, std::nullopt, ++seed);
      ok = ok && res.report->z > 3.0;
      detail += fmt(", r=%.0f", double(r)) + fmt(" z=%.2f", res.report->z) +
                fmt(" (exact l1 %.2e)", res.exact_l1);
    }
    detail += "; ";
  }
  return ok;
}

bool broom(std::string &detail) {
  BroomOptions opt;
  opt.reps = {1, 2};
  const auto rows = run_broom_study(opt);
  double lo = 1e9, hi = -1e9, null3 = 0, null17 = 0;
  bool null_ok = true;
  for (const auto &r : rows) {
    if (r.reps == 2) {
      lo = std::min(lo, r.exact_l1);
      hi = std::max(hi, r.exact_l1);
    }
    if (r.qubits == 3) null_ok = null_ok && std::abs(r.null_95 - 0.05) <= 0.025;
    if (r.qubits == 17) null_ok = null_ok && std::abs(r.null_95 - 1.48) <= 0.15 * 1.48;
    if (r.reps == 1 && r.qubits == 3) null3 = r.null_95;
    if (r.reps == 1 && r.qubits == 17) null17 = r.null_95;
  }
  const auto cross = broom_crossing(rows, 1);
  const bool level = std::abs(lo - 1.266) <= 0.01 && std::abs(hi - 1.266) <= 0.01;
  const bool flat = hi - lo < 0.01;
  const bool crossing = cross && *cross >= 14 && *cross <= 16;
  detail = "r=2 aligned l1 in [" + fmt("%.4f", lo) + fmt(", %.4f]", hi) + fmt(", null95 %.3f", null3) +
           fmt(" at 3 qb -> %.3f at 17 qb", null17) + ", r=1 crossing at " +
           (cross ? std::to_string(*cross) : std::string("none")) + " qubits";
  return level && flat && null_ok && crossing;
}

bool srg(std::string &detail) {
  const auto res = run_srg_suite(CircuitParams::canonical(), SamplingConfig{}, std::nullopt, 70);
  bool ok = true;
  for (const auto &r : res) {
    ok = ok && r.report->z > 3.0;
    detail += r.id + fmt(" z=%.2f", r.report->z) + fmt(" l1=%.2e; ", r.exact_l1);
  }
  return ok && res[0].exact_l1 > 0.01;
}

bool sweeps(std::string &detail) {
  const auto enc = run_sweep(SweepAxis::Enc, {2.0, 2.875, 4.5}, default_sweep_instances(SweepAxis::Enc, 0),
                             CircuitParams::canonical(), SamplingConfig{}, 80);
  const auto reps = run_sweep(SweepAxis::Reps, {1, 2, 4}, default_sweep_instances(SweepAxis::Reps, 0),
                              CircuitParams::canonical(), SamplingConfig{}, 81);
  auto find = [](const std::vector<SweepRow> &rows, double v) {
    return *std::find_if(rows.begin(), rows.end(), [v](const SweepRow &r) { return r.value == v; });
  };
  const double z2 = find(enc, 2.0).mean_z, z2875 = find(enc, 2.875).mean_z, z45 = find(enc, 4.5).mean_z;
  const double t1 = find(reps, 1).mean_tv, t2 = find(reps, 2).mean_tv, t4 = find(reps, 4).mean_tv;
  detail = fmt("mean z enc 2.000=%.2f", z2) + fmt(" 2.875=%.2f", z2875) + fmt(" 4.500=%.2f", z45) +
           fmt("; mean TV r1=%.4f", t1) + fmt(" r2=%.4f", t2) + fmt(" r4=%.4f", t4);
  return z2875 > z2 && z2875 > z45 && t2 > t1 && t2 > t4;
}

bool noise(std::string &detail) {
  const auto pair = build_cfi(path_graph(3));
  const NoiseSpec spec{1e-4, 5e-3, 1e-2};
  const auto res = compare_graphs(pair.untwisted, pair.twisted, CircuitParams::canonical(),
                                  SamplingConfig{}, spec, 90);
  const double z = res.report->z;

  std::size_t checks = 0, violations = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (const char *which : {"p1", "p2", "p_ro"}) {
      const auto rows = noise_scaling(pair.untwisted, pair.twisted, CircuitParams::canonical(), spec,
                                      which, 4.0, 2, 1000, 100, derive_seed(91, seed));
      for (std::size_t i = 1; i < rows.size(); ++i) {
        ++checks;
        violations += rows[i].exact_l1 > rows[i - 1].exact_l1;
      }
    }
  }
  const double rate = double(violations) / double(checks);
  detail = fmt("noisy z=%.2f", z) + ", monotonicity violations " + std::to_string(violations) + "/" +
           std::to_string(checks) + fmt(" (%.1f%%)", 100.0 * rate);
  return z > 3.0 && rate < 0.05;
}

bool cross_validation(std::string &detail) {
  std::mt19937_64 rng(10);
  double worst_gate = 0.0, worst_ref = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_graph(rng, 1, 8);
    CircuitParams p = CircuitParams::canonical();
    p.reps = 1 + rng() % 3;
    const auto fast = run_circuit(g, p).amplitudes;
    const auto gate = run_trajectory(g, p, {}).amplitudes;
    const auto ref = reference::run(g, p.theta_enc, p.theta_ent, p.theta_mix, p.reps);
    for (std::size_t i = 0; i < fast.size(); ++i) {
      worst_gate = std::max(worst_gate, std::abs(fast[i] - gate[i]));
      worst_ref = std::max(worst_ref, std::abs(fast[i] - ref[i]));
    }
  }
  double worst_enc = 0.0;
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_graph(rng, 1, 6);
    const double theta = std::uniform_real_distribution<double>(0.0, 2 * M_PI)(rng);
    const auto sv = encode(g, theta);
    for (std::uint64_t s = 0; s < sv.amplitudes.size(); ++s) {
      worst_enc = std::max(worst_enc, std::abs(encoder_amplitude(g, theta, s) - std::abs(sv.amplitudes[s])));
    }
  }
  detail = fmt("diagonal vs gate path %.2e", worst_gate) + fmt(", vs reference %.2e", worst_ref) +
           fmt(", encoder closed form %.2e", worst_enc);
  return worst_gate < tolerance::kExact && worst_ref < tolerance::kExact && worst_enc < tolerance::kExact;
}

}  // namespace

int main() {
  timed(1, permutation_invariance);
  timed(2, completeness);
  timed(3, cut_reconstruction);
  timed(4, cfi_sizes);
  timed(5, cfi_separation);
  timed(6, broom);
  timed(7, srg);
  timed(8, sweeps);
  timed(9, noise);
  timed(10, cross_validation);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
