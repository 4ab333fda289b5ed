#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "quic/embed.hpp"
#include "quic/error.hpp"
#include "quic/harness.hpp"

namespace quic {

namespace {

constexpr std::array<std::pair<Experiment, const char *>, 9> kExperimentNames{{
    {Experiment::Embed, "embed"},
    {Experiment::Compare, "compare"},
    {Experiment::ValidateExhaustive, "validate-exhaustive"},
    {Experiment::ValidateFamilies, "validate-families"},
    {Experiment::SrgSuite, "srg-suite"},
    {Experiment::Cfi, "cfi"},
    {Experiment::Broom, "broom"},
    {Experiment::Sweep, "sweep"},
    {Experiment::ShotScaling, "shot-scaling"},
}};

template <typename T>
T field_or(const nlohmann::json &j, const char *key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception &) {
    throw Error(ErrorCode::Parse, std::string("config: bad value for '") + key + "'");
  }
}

}  // namespace

std::string to_string(Experiment e) {
  for (const auto &[tag, name] : kExperimentNames) {
    if (tag == e) return name;
  }
  return "unknown";
}

Experiment parse_experiment(std::string_view text) {
  for (const auto &[tag, name] : kExperimentNames) {
    if (text == name) return tag;
  }
  throw InvalidParameter("experiment", "unknown tag '" + std::string(text) + "'");
}

SeparationConfig SamplingConfig::separation(std::uint64_t seed) const {
  SeparationConfig c;
  c.subsample = subsample;
  c.repeats = repeats;
  c.head = head;
  c.seed = seed;
  return c;
}

nlohmann::json to_json(const SamplingConfig &s) {
  return {{"shots", s.shots}, {"subsample", s.subsample}, {"repeats", s.repeats}, {"head", s.head}};
}

SamplingConfig sampling_from_json(const nlohmann::json &j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "sampling: expected an object");
  SamplingConfig s;
  s.shots = field_or(j, "shots", s.shots);
  s.subsample = field_or(j, "subsample", s.subsample);
  s.repeats = field_or(j, "repeats", s.repeats);
  s.head = field_or(j, "head", s.head);
  return s;
}

nlohmann::json to_json(const ExperimentConfig &config) {
  nlohmann::json families = nlohmann::json::array();
  for (const auto &f : config.families) families.push_back(to_string(f));
  return {{"experiment", to_string(config.experiment)},
          {"params", params_to_json(config.params)},
          {"sampling", to_json(config.sampling)},
          {"families", families},
          {"noise", config.noise ? to_json(*config.noise) : nlohmann::json(nullptr)},
          {"seed", config.seed},
          {"output", config.output}};
}

ExperimentConfig config_from_json(const nlohmann::json &j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "config: expected an object");
  ExperimentConfig c;
  c.experiment = parse_experiment(field_or<std::string>(j, "experiment", "embed"));
  if (j.contains("params")) c.params = params_from_json(j["params"]);
  if (j.contains("sampling")) c.sampling = sampling_from_json(j["sampling"]);
  for (const auto &f : field_or(j, "families", std::vector<std::string>{})) {
    c.families.push_back(parse_family(f));
  }
  if (j.contains("noise") && !j["noise"].is_null()) c.noise = noise_from_json(j["noise"]);
  c.seed = field_or(j, "seed", c.seed);
  c.output = field_or<std::string>(j, "output", "");
  return c;
}

void write_artifact(const std::string &path, const ExperimentConfig &config,
                    const nlohmann::json &results) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw Error(ErrorCode::InvalidParameter, "cannot write " + path);
  out << nlohmann::json{{"config", to_json(config)}, {"results", results}}.dump(2) << '\n';
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char *v = std::getenv("QUIC_SEED");
  if (v == nullptr || *v == '\0') return fallback;
  char *end = nullptr;
  const unsigned long long s = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0') throw InvalidParameter("QUIC_SEED", "not an unsigned integer");
  return s;
}

}  // namespace quic
