#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quic/cfi.hpp"
#include "quic/embed.hpp"
#include "quic/error.hpp"
#include "quic/graph_io.hpp"
#include "quic/harness.hpp"

using namespace quic;

namespace {

nlohmann::json read_json(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

void write_text(const std::string &path, const std::string &text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw Error(ErrorCode::InvalidParameter, "cannot write " + path);
  out << text;
}

std::string z_text(double z) {
  if (std::isinf(z)) return z > 0 ? "inf" : "-inf";
  std::ostringstream s;
  s.precision(3);
  s << std::fixed << z;
  return s.str();
}

void summary(const PairResult &r) {
  std::cout << r.id << "  qubits=" << r.qubits_a << "/" << r.qubits_b
            << "  exact_l1=" << r.exact_l1;
  if (r.report) {
    std::cout << "  z=" << z_text(r.report->z) << "  " << (r.report->pass ? "separated" : "not separated");
  }
  std::cout << '\n';
}

std::vector<std::size_t> parse_reps(const std::string &text) {
  std::vector<std::size_t> out;
  for (double v : parse_grid(text)) {
    if (v < 1 || v != std::floor(v)) throw InvalidParameter("reps", "expected positive integers");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

// Options shared by most subcommands.
struct Common {
  std::string params_file;
  double theta_enc = CircuitParams::canonical().theta_enc;
  double theta_ent = CircuitParams::canonical().theta_ent;
  double theta_mix = CircuitParams::canonical().theta_mix;
  std::size_t reps = CircuitParams::canonical().reps;
  SamplingConfig sampling;
  std::string noise_file;
  std::uint64_t seed = 0;
  std::string out;

  CircuitParams params() const {
    CircuitParams p = params_file.empty() ? CircuitParams{theta_enc, theta_ent, theta_mix, reps}
                                          : params_from_json(read_json(params_file));
    p.validate();
    return p;
  }

  std::optional<NoiseSpec> noise() const {
    if (noise_file.empty()) return std::nullopt;
    return noise_from_json(read_json(noise_file));
  }

  ExperimentConfig config(Experiment e) const {
    ExperimentConfig c;
    c.experiment = e;
    c.params = params();
    c.sampling = sampling;
    c.noise = noise();
    c.seed = seed;
    c.output = out.empty() ? "results/" + to_string(e) + ".json" : out;
    return c;
  }
};

void add_params(CLI::App *cmd, Common &c) {
  cmd->add_option("--params", c.params_file, "Circuit parameters as a JSON file");
  cmd->add_option("--theta-enc", c.theta_enc, "Encoding angle scale");
  cmd->add_option("--theta-ent", c.theta_ent, "Entangling angle");
  cmd->add_option("--theta-mix", c.theta_mix, "Mixer angle");
  cmd->add_option("--reps", c.reps, "Repetitions of the entangler and mixer")->check(CLI::PositiveNumber);
}

void add_sampling(CLI::App *cmd, Common &c) {
  cmd->add_option("--shots", c.sampling.shots, "Shots per graph");
  cmd->add_option("--subsample", c.sampling.subsample, "Shots per subsample");
  cmd->add_option("--repeats", c.sampling.repeats, "Subsample pairs");
  cmd->add_option("--head", c.sampling.head, "Head length k (0 = untruncated)");
}

void add_output(CLI::App *cmd, Common &c) {
  cmd->add_option("--out", c.out, "JSON artifact path");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Quantum graph embedding toolkit"};
  app.require_subcommand(1);
  Common c;
  try {
    c.seed = seed_from_env(0);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  app.add_option("--seed", c.seed, "Experiment seed (default: QUIC_SEED or 0)");

  // embed
  auto *embed = app.add_subcommand("embed", "Sorted embedding of one graph");
  std::string graph_path;
  embed->add_option("graph", graph_path, "Graph file (JSON or edge list)")->required();
  add_params(embed, c);
  embed->add_option("--shots", c.sampling.shots, "Shots (0 = exact distribution)");
  embed->add_option("--head", c.sampling.head, "Head length k (0 = untruncated)");
  add_output(embed, c);

  // compare
  auto *compare = app.add_subcommand("compare", "Separation test for two graphs");
  std::string path_a, path_b;
  compare->add_option("a", path_a, "First graph file")->required();
  compare->add_option("b", path_b, "Second graph file")->required();
  compare->add_option("--noise", c.noise_file, "Noise spec JSON {p1, p2, p_ro}");
  add_params(compare, c);
  add_sampling(compare, c);
  add_output(compare, c);

  // cfi
  auto *cfi = app.add_subcommand("cfi", "Build CFI pairs and optionally run them");
  std::vector<std::string> bases;
  std::string emit_dir, reps_list = "1,2";
  bool run_cfi = false;
  cfi->add_option("--base", bases, "Base family, e.g. path:6 (repeatable)")->required();
  cfi->add_option("--emit", emit_dir, "Directory for untwisted/twisted graph files");
  cfi->add_flag("--run", run_cfi, "Run the separation test for each base");
  cfi->add_option("--reps-list", reps_list, "Repetition counts to run, e.g. 1,2");
  cfi->add_option("--noise", c.noise_file, "Noise spec JSON");
  add_params(cfi, c);
  add_sampling(cfi, c);
  add_output(cfi, c);

  // validate
  auto *validate = app.add_subcommand("validate", "Validation suites");
  std::size_t exhaustive = 0, shots_max_n = 5;
  std::vector<std::string> families;
  validate->add_option("--exhaustive", exhaustive, "All graphs up to this many vertices (<= 7)");
  validate->add_option("--shots-max-n", shots_max_n, "Largest size that also gets z-tests");
  validate->add_option("--families", families, "Family specs paired with rewired copies");
  validate->add_option("--noise", c.noise_file, "Noise spec JSON (families suite)");
  add_params(validate, c);
  add_sampling(validate, c);
  add_output(validate, c);

  // broom
  auto *broom = app.add_subcommand("broom", "Global-encoding broom study");
  std::string broom_reps = "1,2,3", csv_path;
  std::size_t null_pairs = 200;
  broom->add_option("--reps-list", broom_reps, "Repetition counts");
  broom->add_option("--null-pairs", null_pairs, "Fresh histogram pairs per cutoff");
  broom->add_option("--csv", csv_path, "Also write the table as CSV");
  add_output(broom, c);

  // sweep
  auto *sweep = app.add_subcommand("sweep", "One-axis parameter sweep");
  std::string axis_text, grid_text;
  sweep->add_option("--axis", axis_text, "enc, ent, mix or reps")->required();
  sweep->add_option("--grid", grid_text, "lo:hi:step or a,b,c")->required();
  sweep->add_option("--csv", csv_path, "Also write the table as CSV");
  add_params(sweep, c);
  add_sampling(sweep, c);
  add_output(sweep, c);

  // srg
  auto *srg = app.add_subcommand("srg", "Strongly regular style pairs");
  srg->add_option("--noise", c.noise_file, "Noise spec JSON");
  add_params(srg, c);
  add_sampling(srg, c);
  add_output(srg, c);

  // shot-scaling and zipf plot data
  auto *scaling = app.add_subcommand("shot-scaling", "Null and signal l1 against shot count");
  std::string shots_grid = "256,1024,4096,16384";
  std::size_t scaling_repeats = 64;
  scaling->add_option("a", path_a, "First graph file")->required();
  scaling->add_option("b", path_b, "Second graph file")->required();
  scaling->add_option("--shots-grid", shots_grid, "Shot counts");
  scaling->add_option("--repeats", scaling_repeats, "Pairs per shot count");
  scaling->add_option("--head", c.sampling.head, "Head length k");
  scaling->add_option("--csv", csv_path, "Also write the table as CSV");
  add_params(scaling, c);
  add_output(scaling, c);

  auto *zipf = app.add_subcommand("zipf", "Rank, probability and cumulative mass of one graph");
  std::size_t zipf_k = 0;
  zipf->add_option("graph", graph_path, "Graph file")->required();
  zipf->add_option("--head", zipf_k, "Ranks to emit (0 = all)");
  add_params(zipf, c);

  CLI11_PARSE(app, argc, argv);

  try {
    if (embed->parsed()) {
      const Graph g = read_graph_file(graph_path);
      const CircuitParams p = c.params();
      SortedDistribution d;
      if (c.sampling.shots == 0 || embed->count("--shots") == 0) {
        d = embed_graph(g, p, c.sampling.head);
      } else {
        d = embed_counts(sample_counts(output_distribution(run_circuit(g, p)), c.sampling.shots, c.seed),
                         c.sampling.head);
      }
      auto j = embedding_to_json(d, p, graph_hash(g));
      if (embed->count("--shots") > 0) j["shots"] = c.sampling.shots;
      j["seed"] = c.seed;
      if (c.out.empty()) {
        std::cout << j.dump(2) << '\n';
      } else {
        write_text(c.out, j.dump(2) + "\n");
      }
    } else if (compare->parsed()) {
      const Graph a = read_graph_file(path_a), b = read_graph_file(path_b);
      const auto config = c.config(Experiment::Compare);
      const auto r = compare_graphs(a, b, config.params, config.sampling, config.noise, config.seed,
                                    path_a + " vs " + path_b);
      summary(r);
      write_artifact(config.output, config, to_json(r));
    } else if (cfi->parsed()) {
      auto config = c.config(Experiment::Cfi);
      for (const auto &text : bases) config.families.push_back(parse_family(text));
      if (!emit_dir.empty()) {
        for (const auto &spec : config.families) {
          const Graph base = generate(spec);
          const auto pair = build_cfi(base);
          nlohmann::json meta{{"base", to_string(spec)},
                              {"qubits", pair.untwisted.num_vertices()},
                              {"twist_edge", {pair.twist_edge.u, pair.twist_edge.v}}};
          std::string stem = to_string(spec);
          std::replace(stem.begin(), stem.end(), ':', '_');
          for (const auto &[tag, g] : {std::pair{"untwisted", &pair.untwisted},
                                       std::pair{"twisted", &pair.twisted}}) {
            auto j = graph_to_json(*g);
            j["metadata"] = meta;
            j["metadata"]["variant"] = tag;
            const auto path = (std::filesystem::path(emit_dir) / (stem + "_" + tag + ".json")).string();
            write_text(path, j.dump(2) + "\n");
            std::cout << "wrote " << path << " (" << g->num_vertices() << " vertices)\n";
          }
        }
      }
      if (run_cfi) {
        const auto rows = run_cfi_campaign(config.families, config.params, parse_reps(reps_list),
                                           config.sampling, config.noise, config.seed);
        nlohmann::json results = nlohmann::json::array();
        for (const auto &row : rows) {
          if (row.skipped) {
            std::cout << "cfi(" << row.base << ")  qubits=" << row.qubits << "  skipped: " << row.reason
                      << '\n';
          } else {
            std::cout << "r=" << row.reps << "  ";
            summary(*row.result);
          }
          results.push_back(to_json(row));
        }
        write_artifact(config.output, config, results);
      }
    } else if (validate->parsed()) {
      if (exhaustive == 0 && families.empty()) {
        std::cerr << "error: give --exhaustive N or --families\n";
        return 2;
      }
      if (exhaustive > 0) {
        auto config = c.config(Experiment::ValidateExhaustive);
        ExhaustiveOptions opt;
        opt.max_n = exhaustive;
        opt.shots_max_n = shots_max_n;
        if (validate->count("--params") + validate->count("--reps") + validate->count("--theta-enc") +
                validate->count("--theta-ent") + validate->count("--theta-mix") >
            0) {
          opt.params = config.params;
        }
        config.params = opt.params;
        opt.sampling = config.sampling;
        opt.seed = config.seed;
        const auto report = run_validate_exhaustive(opt);
        for (const auto &l : report.levels) {
          std::cout << "n=" << l.n << "  graphs=" << l.graphs << "  pairs=" << l.pairs
                    << "  separated=" << l.separated_exact << "  min_l1=" << l.min_exact_l1;
          if (l.shot_pairs > 0) std::cout << "  z-separated=" << l.separated_shots << "/" << l.shot_pairs;
          std::cout << "  control_max_l1=" << l.control_max_l1 << '\n';
        }
        std::cout << "cross-size pairs=" << report.cross_pairs << "  separated=" << report.cross_separated
                  << "\npass rate " << report.pass_rate << '\n';
        write_artifact(config.output, config, to_json(report));
      }
      if (!families.empty()) {
        auto config = c.config(Experiment::ValidateFamilies);
        if (c.out.empty()) config.output = "results/validate-families.json";
        for (const auto &text : families) config.families.push_back(parse_family(text));
        const auto rows = run_family_suite(config.families, config.params, config.sampling,
                                           config.noise, config.seed);
        nlohmann::json results = nlohmann::json::array();
        for (const auto &r : rows) {
          summary(r);
          results.push_back(to_json(r));
        }
        write_artifact(config.output, config, results);
      }
    } else if (broom->parsed()) {
      auto config = c.config(Experiment::Broom);
      config.families = {parse_family("broom:17:2"), parse_family("broom+:17:2")};
      config.sampling.shots = 4096;
      BroomOptions opt;
      opt.reps = parse_reps(broom_reps);
      opt.null_pairs = null_pairs;
      opt.seed = config.seed;
      const auto rows = run_broom_study(opt);
      const auto csv = broom_csv(rows);
      std::cout << csv;
      if (!csv_path.empty()) write_text(csv_path, csv);
      nlohmann::json results = nlohmann::json::array();
      for (const auto &r : rows) {
        results.push_back({{"reps", r.reps}, {"cutoff", r.cutoff}, {"qubits", r.qubits},
                           {"exact_l1", r.exact_l1}, {"sorted_l1", r.sorted_l1}, {"null_95", r.null_95}});
      }
      write_artifact(config.output, config, results);
    } else if (sweep->parsed()) {
      auto config = c.config(Experiment::Sweep);
      const SweepAxis axis = parse_axis(axis_text);
      const auto grid = parse_grid(grid_text);
      const auto rows = run_sweep(axis, grid, default_sweep_instances(axis, config.seed), config.params,
                                  config.sampling, config.seed);
      const auto csv = sweep_csv(axis, rows);
      std::cout << csv;
      if (!csv_path.empty()) write_text(csv_path, csv);
      nlohmann::json results{{"axis", to_string(axis)}, {"rows", nlohmann::json::array()}};
      for (const auto &r : rows) {
        results["rows"].push_back({{"rank", r.rank}, {"value", r.value}, {"mean_z", r.mean_z},
                                   {"worst_z", r.worst_z}, {"mean_tv", r.mean_tv},
                                   {"instances", r.instances}});
      }
      write_artifact(config.output, config, results);
    } else if (srg->parsed()) {
      const auto config = c.config(Experiment::SrgSuite);
      const auto rows = run_srg_suite(config.params, config.sampling, config.noise, config.seed);
      nlohmann::json results = nlohmann::json::array();
      for (const auto &r : rows) {
        summary(r);
        results.push_back(to_json(r));
      }
      write_artifact(config.output, config, results);
    } else if (scaling->parsed()) {
      auto config = c.config(Experiment::ShotScaling);
      config.sampling.repeats = scaling_repeats;
      std::vector<std::uint64_t> shots;
      for (double v : parse_grid(shots_grid)) shots.push_back(static_cast<std::uint64_t>(v));
      const auto rows = shot_scaling(read_graph_file(path_a), read_graph_file(path_b), config.params,
                                     shots, scaling_repeats, config.sampling.head, config.seed);
      const auto csv = shot_scaling_csv(rows);
      std::cout << csv;
      if (!csv_path.empty()) write_text(csv_path, csv);
      nlohmann::json results = nlohmann::json::array();
      for (const auto &r : rows) {
        results.push_back({{"shots", r.shots}, {"null_mean", r.null_mean}, {"null_sd", r.null_sd},
                           {"signal_mean", r.signal_mean}, {"signal_sd", r.signal_sd}});
      }
      write_artifact(config.output, config, results);
    } else if (zipf->parsed()) {
      std::cout << zipf_csv(zipf_table(read_graph_file(graph_path), c.params(), zipf_k));
    }
  } catch (const InvalidParameter &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error &e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
