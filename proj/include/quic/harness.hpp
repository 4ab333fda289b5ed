#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "quic/circuit.hpp"
#include "quic/generators.hpp"
#include "quic/graph.hpp"
#include "quic/noise.hpp"
#include "quic/stats.hpp"

namespace quic {

// ---------------------------------------------------------------------------
// Configuration and artifacts

enum class Experiment {
  Embed,
  Compare,
  ValidateExhaustive,
  ValidateFamilies,
  SrgSuite,
  Cfi,
  Broom,
  Sweep,
  ShotScaling,
};

std::string to_string(Experiment e);
Experiment parse_experiment(std::string_view text);

struct SamplingConfig {
  std::uint64_t shots = 1 << 15;   // per graph
  std::uint64_t subsample = 4096;  // m
  std::size_t repeats = 64;        // R
  std::size_t head = 100;          // k

  SeparationConfig separation(std::uint64_t seed) const;
  friend bool operator==(const SamplingConfig &, const SamplingConfig &) = default;
};

/// Everything needed to rerun an experiment. Per-task seeds are derived from
/// `seed` with derive_seed, never drawn from a shared stream.
struct ExperimentConfig {
  Experiment experiment = Experiment::Embed;
  CircuitParams params;
  SamplingConfig sampling;
  std::vector<GraphFamilySpec> families;
  std::optional<NoiseSpec> noise;
  std::uint64_t seed = 0;
  std::string output;
};

nlohmann::json to_json(const SamplingConfig &s);
SamplingConfig sampling_from_json(const nlohmann::json &j);
nlohmann::json to_json(const ExperimentConfig &config);
ExperimentConfig config_from_json(const nlohmann::json &j);

/// Writes {"config": ..., "results": ...} to `path`, creating parent
/// directories.
void write_artifact(const std::string &path, const ExperimentConfig &config,
                    const nlohmann::json &results);

/// Seed from the QUIC_SEED environment variable, or `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback = 0);

// ---------------------------------------------------------------------------
// Pairwise comparison

struct PairResult {
  std::string id;
  std::size_t qubits_a = 0;
  std::size_t qubits_b = 0;
  double exact_l1 = 0.0;  // untruncated sorted l1 of the exact distributions
  std::optional<SeparationReport> report;
};

nlohmann::json to_json(const PairResult &r);

/// Finite-shot histogram of one graph: exact sampling, or noisy trajectories
/// when `noise` is set.
CountsHistogram measure(const Graph &g, const CircuitParams &params, std::uint64_t shots,
                        const std::optional<NoiseSpec> &noise, std::uint64_t seed);

/// Exact sorted l1 plus the subsampling z-test. Histograms use streams 1 and
/// 2 of `seed`, the z-test stream 3.
PairResult compare_graphs(const Graph &a, const Graph &b, const CircuitParams &params,
                          const SamplingConfig &sampling, const std::optional<NoiseSpec> &noise,
                          std::uint64_t seed, std::string id = {});

// ---------------------------------------------------------------------------
// Validation suites

/// One representative per isomorphism class of graphs on exactly n vertices,
/// ordered by edge count. n <= 7.
std::vector<Graph> enumerate_graphs(std::size_t n);

struct ExhaustiveOptions {
  std::size_t max_n = 6;
  std::size_t shots_max_n = 5;  // z-tests only for levels up to this size
  CircuitParams params{CircuitParams::canonical().theta_enc, CircuitParams::canonical().theta_ent,
                       CircuitParams::canonical().theta_mix, 1};
  SamplingConfig sampling;
  std::uint64_t seed = 0;
};

struct ExhaustiveLevel {
  std::size_t n = 0;
  std::size_t graphs = 0;
  std::size_t pairs = 0;
  std::size_t separated_exact = 0;  // exact l1 > kCrossPath
  double min_exact_l1 = 0.0;
  std::size_t shot_pairs = 0;
  std::size_t separated_shots = 0;  // z > threshold
  double control_max_l1 = 0.0;      // relabeled copy of every class
  std::size_t control_flagged = 0;
};

struct ExhaustiveReport {
  std::vector<ExhaustiveLevel> levels;
  std::vector<PairResult> pairs;  // within-level pairs
  std::size_t cross_pairs = 0;    // classes of different sizes
  std::size_t cross_separated = 0;
  double cross_min_l1 = 0.0;
  double pass_rate = 0.0;  // exact separations over all pairs
};

ExhaustiveReport run_validate_exhaustive(const ExhaustiveOptions &options);
nlohmann::json to_json(const ExhaustiveReport &r);

/// Each family member against a degree-preserving rewiring of itself.
std::vector<PairResult> run_family_suite(const std::vector<GraphFamilySpec> &families,
                                         const CircuitParams &params,
                                         const SamplingConfig &sampling,
                                         const std::optional<NoiseSpec> &noise, std::uint64_t seed);

/// Structured twins: ladders, chorded cycles, inscribed triangles.
std::vector<std::pair<Graph, Graph>> structured_pairs();

/// The four strongly regular style pairs, in order: Shrikhande / rook4x4,
/// Petersen / prism5, Q3 / C8(1,4), L(K_{2,4}) / C8(1,2).
std::vector<std::pair<std::string, std::string>> srg_pair_names();

std::vector<PairResult> run_srg_suite(const CircuitParams &params, const SamplingConfig &sampling,
                                      const std::optional<NoiseSpec> &noise, std::uint64_t seed);

struct CfiCampaignRow {
  std::string base;
  std::size_t qubits = 0;
  std::size_t reps = 0;
  bool skipped = false;
  std::string reason;
  std::optional<PairResult> result;
};

/// Both CFI twins of each base at every reps value. Bases above `ceiling`
/// qubits are reported as skipped.
std::vector<CfiCampaignRow> run_cfi_campaign(const std::vector<GraphFamilySpec> &bases,
                                             const CircuitParams &params,
                                             const std::vector<std::size_t> &reps,
                                             const SamplingConfig &sampling,
                                             const std::optional<NoiseSpec> &noise,
                                             std::uint64_t seed,
                                             std::size_t ceiling = kDefaultQubitCeiling);
nlohmann::json to_json(const CfiCampaignRow &r);

// ---------------------------------------------------------------------------
// Global-encoding broom study

struct BroomOptions {
  std::vector<std::size_t> reps{1, 2, 3};
  std::size_t n = 17;
  std::size_t pendants = 2;
  CircuitParams params = CircuitParams::canonical();
  std::uint64_t shots = 4096;
  std::size_t null_pairs = 200;
  std::uint64_t seed = 0;
};

struct BroomRow {
  std::size_t reps = 0;
  std::size_t cutoff = 0;  // path vertices retained beyond centroid and pendants
  std::size_t qubits = 0;
  double exact_l1 = 0.0;   // label-aligned, on the retained marginal
  double sorted_l1 = 0.0;  // untruncated sorted, for reference
  double null_95 = 0.0;    // aligned l1 between two fresh shot histograms
};

/// Broom against broom-with-pendant-edge, marginalized to cutoffs 0..n-3.
std::vector<BroomRow> run_broom_study(const BroomOptions &options);

/// Smallest retained-qubit count at which exact_l1 <= null_95 for `reps`.
std::optional<std::size_t> broom_crossing(const std::vector<BroomRow> &rows, std::size_t reps);

std::string broom_csv(const std::vector<BroomRow> &rows);

// ---------------------------------------------------------------------------
// Parameter sweeps

enum class SweepAxis { Enc, Ent, Mix, Reps };

std::string to_string(SweepAxis a);
SweepAxis parse_axis(std::string_view text);

/// "lo:hi:step" (inclusive, tolerant of rounding) or "a,b,c".
std::vector<double> parse_grid(std::string_view text);

struct SweepRow {
  double value = 0.0;
  double mean_z = 0.0;
  double worst_z = 0.0;
  double mean_tv = 0.0;  // exact untruncated sorted TV
  std::size_t instances = 0;
  std::size_t rank = 0;  // 1 = best; 0 when the grid has one point
};

/// Seeded non-isomorphic pairs: ER(n, 0.4) and, for the reps axis, also
/// BA(n, 2) members at n in {8, 10, 12}, each against a degree-preserving
/// rewiring.
std::vector<std::pair<Graph, Graph>> default_sweep_instances(SweepAxis axis, std::uint64_t seed);

/// Reps axis ranks by mean TV and skips sampling; other axes rank by mean z.
std::vector<SweepRow> run_sweep(SweepAxis axis, const std::vector<double> &grid,
                                const std::vector<std::pair<Graph, Graph>> &instances,
                                const CircuitParams &base, const SamplingConfig &sampling,
                                std::uint64_t seed);

std::string sweep_csv(SweepAxis axis, const std::vector<SweepRow> &rows);

// ---------------------------------------------------------------------------
// Noise studies

struct NoiseScalingRow {
  NoiseSpec noise;
  double exact_l1 = 0.0;  // sorted l1 of trajectory-averaged distributions
};

/// Expected separation of a pair as one noise parameter is multiplied by
/// `factor` `steps` times. Both graphs share the trajectory seed.
/// `which` is "p1", "p2" or "p_ro".
std::vector<NoiseScalingRow> noise_scaling(const Graph &a, const Graph &b,
                                           const CircuitParams &params, const NoiseSpec &start,
                                           std::string_view which, double factor,
                                           std::size_t steps, std::size_t trajectories,
                                           std::size_t head, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Plot data

struct ShotScalingRow {
  std::uint64_t shots = 0;
  double null_mean = 0.0, null_sd = 0.0;
  double signal_mean = 0.0, signal_sd = 0.0;
};

/// Sorted head-k l1 between fresh histograms at each shot count: null pairs
/// from `a`, signal pairs across `a` and `b`.
std::vector<ShotScalingRow> shot_scaling(const Graph &a, const Graph &b,
                                         const CircuitParams &params,
                                         const std::vector<std::uint64_t> &shots,
                                         std::size_t repeats, std::size_t head,
                                         std::uint64_t seed);
std::string shot_scaling_csv(const std::vector<ShotScalingRow> &rows);

struct ZipfRow {
  std::size_t rank = 0;  // 1-based
  double probability = 0.0;
  double cumulative = 0.0;
};

std::vector<ZipfRow> zipf_table(const Graph &g, const CircuitParams &params, std::size_t k);
std::string zipf_csv(const std::vector<ZipfRow> &rows);

}  // namespace quic
