#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "quic/cfi.hpp"
#include "quic/embed.hpp"
#include "quic/error.hpp"
#include "quic/harness.hpp"
#include "quic/isomorphism.hpp"
#include "quic/rewire.hpp"

namespace quic {

namespace {

std::vector<double> exact(const Graph &g, const CircuitParams &params) {
  return output_distribution(run_circuit(g, params));
}

CountsHistogram sample_exact(std::span<const double> p, const Graph &g, const CircuitParams &params,
                             std::uint64_t shots, const std::optional<NoiseSpec> &noise,
                             std::uint64_t seed) {
  if (noise && !noise->is_noiseless()) return run_noisy(g, params, *noise, shots, seed);
  return sample_counts(p, shots, seed);
}

// Sorted degree plus sorted neighbor degrees per vertex; equal for isomorphic
// graphs, so only graphs sharing a key need the full test.
std::vector<std::size_t> invariant_key(const Graph &g) {
  std::vector<std::vector<std::size_t>> rows;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<std::size_t> row{g.degree(v)};
    for (Vertex w : g.neighbors(v)) row.push_back(g.degree(w));
    std::sort(row.begin() + 1, row.end());
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  std::vector<std::size_t> key{g.num_edges()};
  for (const auto &row : rows) {
    key.insert(key.end(), row.begin(), row.end());
    key.push_back(std::numeric_limits<std::size_t>::max());
  }
  return key;
}

std::vector<Vertex> random_permutation(std::size_t n, Rng &rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

nlohmann::json to_json(const PairResult &r) {
  nlohmann::json j{{"id", r.id},
                   {"qubits_a", r.qubits_a},
                   {"qubits_b", r.qubits_b},
                   {"exact_l1", r.exact_l1}};
  j["report"] = r.report ? to_json(*r.report) : nlohmann::json(nullptr);
  return j;
}

CountsHistogram measure(const Graph &g, const CircuitParams &params, std::uint64_t shots,
                        const std::optional<NoiseSpec> &noise, std::uint64_t seed) {
  return run_noisy(g, params, noise.value_or(NoiseSpec{}), shots, seed);
}

PairResult compare_graphs(const Graph &a, const Graph &b, const CircuitParams &params,
                          const SamplingConfig &sampling, const std::optional<NoiseSpec> &noise,
                          std::uint64_t seed, std::string id) {
  PairResult r;
  r.id = std::move(id);
  r.qubits_a = a.num_vertices();
  r.qubits_b = b.num_vertices();
  const auto pa = exact(a, params);
  const auto pb = exact(b, params);
  r.exact_l1 = l1_distance(embed_distribution(pa, 0), embed_distribution(pb, 0));
  const auto ha = sample_exact(pa, a, params, sampling.shots, noise, derive_seed(seed, 1));
  const auto hb = sample_exact(pb, b, params, sampling.shots, noise, derive_seed(seed, 2));
  r.report = separation_test(ha, hb, sampling.separation(derive_seed(seed, 3)));
  return r;
}

std::vector<Graph> enumerate_graphs(std::size_t n) {
  if (n > 7) throw InvalidParameter("n", "exhaustive enumeration stops at 7 vertices");
  std::vector<Graph> all{Graph(n)};
  std::vector<Graph> frontier{Graph(n)};
  const std::size_t max_edges = n * (n - (n > 0 ? 1 : 0)) / 2;
  for (std::size_t m = 1; m <= max_edges; ++m) {
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
    std::vector<Graph> next;
    for (const Graph &g : frontier) {
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          Graph h = g;
          h.add_edge(u, v);
          auto &bucket = buckets[invariant_key(h)];
          const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                        [&](std::size_t i) { return is_isomorphic(next[i], h); });
          if (seen) continue;
          bucket.push_back(next.size());
          next.push_back(std::move(h));
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return all;
}

ExhaustiveReport run_validate_exhaustive(const ExhaustiveOptions &options) {
  if (options.max_n > 7) throw InvalidParameter("max_n", "must be <= 7");
  options.params.validate();
  ExhaustiveReport report;
  std::vector<std::vector<SortedDistribution>> embeddings;
  Rng perm_rng = make_rng(derive_seed(options.seed, 0xc0));
  std::uint64_t stream = 0x1000;

  for (std::size_t n = 1; n <= options.max_n; ++n) {
    const auto graphs = enumerate_graphs(n);
    ExhaustiveLevel level;
    level.n = n;
    level.graphs = graphs.size();
    level.min_exact_l1 = std::numeric_limits<double>::infinity();
    const bool shots = n <= options.shots_max_n;

    std::vector<std::vector<double>> dists;
    std::vector<SortedDistribution> emb;
    std::vector<CountsHistogram> hists;
    for (const Graph &g : graphs) {
      dists.push_back(exact(g, options.params));
      emb.push_back(embed_distribution(dists.back(), 0));
      if (shots) hists.push_back(sample_counts(dists.back(), options.sampling.shots, ++stream));
    }

    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (std::size_t j = i + 1; j < graphs.size(); ++j) {
        PairResult pr;
        pr.id = "n" + std::to_string(n) + ":" + std::to_string(i) + "-" + std::to_string(j);
        pr.qubits_a = pr.qubits_b = n;
        pr.exact_l1 = l1_distance(emb[i], emb[j]);
        ++level.pairs;
        level.separated_exact += pr.exact_l1 > tolerance::kCrossPath;
        level.min_exact_l1 = std::min(level.min_exact_l1, pr.exact_l1);
        if (shots) {
          pr.report = separation_test(hists[i], hists[j],
                                      options.sampling.separation(derive_seed(options.seed, ++stream)));
          ++level.shot_pairs;
          level.separated_shots += pr.report->pass;
        }
        report.pairs.push_back(std::move(pr));
      }
    }

    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph copy = graphs[i].relabeled(random_permutation(n, perm_rng));
      const auto pc = exact(copy, options.params);
      level.control_max_l1 =
          std::max(level.control_max_l1, l1_distance(emb[i], embed_distribution(pc, 0)));
      if (shots) {
        const auto hc = sample_counts(pc, options.sampling.shots, ++stream);
        const auto r = separation_test(hists[i], hc,
                                       options.sampling.separation(derive_seed(options.seed, ++stream)));
        level.control_flagged += r.pass;
      }
    }
    if (level.pairs == 0) level.min_exact_l1 = 0.0;
    report.levels.push_back(level);
    embeddings.push_back(std::move(emb));
  }

  report.cross_min_l1 = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < embeddings.size(); ++a) {
    for (std::size_t b = a + 1; b < embeddings.size(); ++b) {
      for (const auto &x : embeddings[a]) {
        for (const auto &y : embeddings[b]) {
          const double d = l1_distance(x, y);
          ++report.cross_pairs;
          report.cross_separated += d > tolerance::kCrossPath;
          report.cross_min_l1 = std::min(report.cross_min_l1, d);
        }
      }
    }
  }
  if (report.cross_pairs == 0) report.cross_min_l1 = 0.0;

  std::size_t total = report.cross_pairs, separated = report.cross_separated;
  for (const auto &l : report.levels) {
    total += l.pairs;
    separated += l.separated_exact;
  }
  report.pass_rate = total == 0 ? 1.0 : static_cast<double>(separated) / static_cast<double>(total);
  return report;
}

nlohmann::json to_json(const ExhaustiveReport &r) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto &l : r.levels) {
    levels.push_back({{"n", l.n},
                      {"graphs", l.graphs},
                      {"pairs", l.pairs},
                      {"separated_exact", l.separated_exact},
                      {"min_exact_l1", l.min_exact_l1},
                      {"shot_pairs", l.shot_pairs},
                      {"separated_shots", l.separated_shots},
                      {"control_max_l1", l.control_max_l1},
                      {"control_flagged", l.control_flagged}});
  }
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto &p : r.pairs) {
    nlohmann::json j{{"id", p.id}, {"exact_l1", p.exact_l1}};
    if (p.report) {
      j["z"] = std::isfinite(p.report->z) ? nlohmann::json(p.report->z)
                                          : nlohmann::json(p.report->z > 0 ? "inf" : "-inf");
      j["pass"] = p.report->pass;
    }
    pairs.push_back(std::move(j));
  }
  return {{"levels", levels},
          {"pairs", pairs},
          {"cross_pairs", r.cross_pairs},
          {"cross_separated", r.cross_separated},
          {"cross_min_l1", r.cross_min_l1},
          {"pass_rate", r.pass_rate}};
}

std::vector<std::pair<Graph, Graph>> structured_pairs() {
  return {
      {circular_ladder(6), twisted_ladder(6)},
      {circular_ladder(8), twisted_ladder(8)},
      {chorded_cycle(12, 3), chorded_cycle(12, 5)},
      {inscribed_triangle_cycle(12, 4), inscribed_triangle_cycle(12, 6)},
  };
}

std::vector<PairResult> run_family_suite(const std::vector<GraphFamilySpec> &families,
                                         const CircuitParams &params,
                                         const SamplingConfig &sampling,
                                         const std::optional<NoiseSpec> &noise, std::uint64_t seed) {
  std::vector<PairResult> out;
  std::uint64_t stream = 0;
  for (const auto &spec : families) {
    const Graph g = generate(spec);
    ++stream;
    Graph h;
    try {
      h = rewire_degree_preserving(g, 1000, derive_seed(seed, 0x5000 + stream));
    } catch (const Error &e) {
      if (e.code() != ErrorCode::RewireExhausted) throw;
      continue;
    }
    out.push_back(compare_graphs(g, h, params, sampling, noise, derive_seed(seed, stream),
                                 to_string(spec) + "~rewired"));
  }
  std::size_t k = 0;
  for (const auto &[a, b] : structured_pairs()) {
    out.push_back(compare_graphs(a, b, params, sampling, noise, derive_seed(seed, 0x9000 + k),
                                 "structured:" + std::to_string(k)));
    ++k;
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> srg_pair_names() {
  return {{"shrikhande", "rook4x4"}, {"petersen", "prism5"}, {"q3", "c8_1_4"}, {"lk24", "c8_1_2"}};
}

std::vector<PairResult> run_srg_suite(const CircuitParams &params, const SamplingConfig &sampling,
                                      const std::optional<NoiseSpec> &noise, std::uint64_t seed) {
  std::vector<PairResult> out;
  std::uint64_t stream = 0;
  for (const auto &[a, b] : srg_pair_names()) {
    out.push_back(compare_graphs(named_graph(a), named_graph(b), params, sampling, noise,
                                 derive_seed(seed, ++stream), a + "/" + b));
  }
  return out;
}

std::vector<CfiCampaignRow> run_cfi_campaign(const std::vector<GraphFamilySpec> &bases,
                                             const CircuitParams &params,
                                             const std::vector<std::size_t> &reps,
                                             const SamplingConfig &sampling,
                                             const std::optional<NoiseSpec> &noise,
                                             std::uint64_t seed, std::size_t ceiling) {
  std::vector<CfiCampaignRow> out;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const Graph base = generate(bases[i]);
    const std::size_t size = cfi_size(base);
    std::optional<CfiPair> pair;
    if (size <= ceiling) pair = build_cfi(base);
    for (std::size_t r : reps) {
      CfiCampaignRow row;
      row.base = to_string(bases[i]);
      row.qubits = size;
      row.reps = r;
      if (!pair) {
        row.skipped = true;
        row.reason = std::to_string(size) + " qubits exceeds the ceiling of " +
                     std::to_string(ceiling);
      } else {
        CircuitParams p = params;
        p.reps = r;
        row.result = compare_graphs(pair->untwisted, pair->twisted, p, sampling, noise,
                                    derive_seed(seed, 16 * i + r), "cfi(" + row.base + ")");
      }
      out.push_back(std::move(row));
    }
  }
  return out;
}

nlohmann::json to_json(const CfiCampaignRow &r) {
  return {{"base", r.base},
          {"qubits", r.qubits},
          {"reps", r.reps},
          {"skipped", r.skipped},
          {"reason", r.reason},
          {"result", r.result ? to_json(*r.result) : nlohmann::json(nullptr)}};
}

}  // namespace quic
