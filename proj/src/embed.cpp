#include "quic/embed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "quic/error.hpp"

namespace quic {

SortedDistribution sort_distribution(std::span<const double> p, std::size_t source_n) {
  for (double v : p) {
    if (v < 0.0) throw Error(ErrorCode::NegativeEntry, "sort_distribution: negative entry");
  }
  SortedDistribution d;
  d.values.assign(p.begin(), p.end());
  std::sort(d.values.begin(), d.values.end(), std::greater<>());
  d.source_n = source_n;
  return d;
}

SortedDistribution sort_counts(const CountsHistogram &h) {
  SortedDistribution d;
  d.source_n = h.num_qubits;
  const double t = static_cast<double>(h.total());
  if (t == 0) return d;
  d.values.reserve(h.counts.size());
  for (const auto &[x, c] : h.counts) d.values.push_back(static_cast<double>(c) / t);
  std::sort(d.values.begin(), d.values.end(), std::greater<>());
  return d;
}

SortedDistribution truncate_head(const SortedDistribution &d, std::size_t k) {
  if (k == 0) throw InvalidParameter("k", "head length must be >= 1");
  SortedDistribution out;
  out.source_n = d.source_n;
  out.head_len = k;
  out.values.assign(k, 0.0);
  std::copy_n(d.values.begin(), std::min(k, d.values.size()), out.values.begin());
  return out;
}

SortedDistribution embed_distribution(std::span<const double> p, std::size_t k) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < p.size()) ++n;
  auto d = sort_distribution(p, n);
  return k == 0 ? d : truncate_head(d, k);
}

SortedDistribution embed_counts(const CountsHistogram &h, std::size_t k) {
  auto d = sort_counts(h);
  return k == 0 ? d : truncate_head(d, k);
}

SortedDistribution embed_graph(const Graph &g, const CircuitParams &params, std::size_t k) {
  const auto p = output_distribution(run_circuit(g, params));
  return embed_distribution(p, k);
}

double l1_distance(const SortedDistribution &a, const SortedDistribution &b) {
  const bool padded = a.head_len == 0 && b.head_len == 0;
  if (!padded && a.values.size() != b.values.size()) {
    throw Error(ErrorCode::LengthMismatch, "l1_distance: lengths " +
                                               std::to_string(a.values.size()) + " and " +
                                               std::to_string(b.values.size()));
  }
  const std::size_t len = std::max(a.values.size(), b.values.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double x = i < a.values.size() ? a.values[i] : 0.0;
    const double y = i < b.values.size() ? b.values[i] : 0.0;
    sum += std::abs(x - y);
  }
  return sum;
}

double tv_distance(const SortedDistribution &a, const SortedDistribution &b) {
  return 0.5 * l1_distance(a, b);
}

double aligned_l1(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw Error(ErrorCode::LengthMismatch, "aligned_l1: lengths differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return sum;
}

double aligned_l1(const CountsHistogram &a, const CountsHistogram &b) {
  if (a.num_qubits != b.num_qubits) {
    throw Error(ErrorCode::LengthMismatch, "aligned_l1: register widths differ");
  }
  const double ta = static_cast<double>(a.total());
  const double tb = static_cast<double>(b.total());
  if (ta == 0 || tb == 0) throw Error(ErrorCode::InsufficientShots, "aligned_l1: empty histogram");
  double sum = 0.0;
  auto ia = a.counts.begin();
  auto ib = b.counts.begin();
  while (ia != a.counts.end() || ib != b.counts.end()) {
    if (ib == b.counts.end() || (ia != a.counts.end() && ia->first < ib->first)) {
      sum += static_cast<double>(ia->second) / ta;
      ++ia;
    } else if (ia == a.counts.end() || ib->first < ia->first) {
      sum += static_cast<double>(ib->second) / tb;
      ++ib;
    } else {
      sum += std::abs(static_cast<double>(ia->second) / ta - static_cast<double>(ib->second) / tb);
      ++ia;
      ++ib;
    }
  }
  return sum;
}

double total_mass(const SortedDistribution &d) {
  double s = 0.0;
  for (double v : d.values) s += v;
  return s;
}

double poisson_floor(std::uint64_t shots, double rel) {
  if (shots == 0) throw Error(ErrorCode::InsufficientShots, "poisson_floor: zero shots");
  if (!(rel > 0.0)) throw InvalidParameter("rel", "must be positive");
  return 1.0 / (rel * rel * static_cast<double>(shots));
}

std::size_t resolvable_count(const SortedDistribution &d, std::uint64_t shots, double rel) {
  const double floor = poisson_floor(shots, rel);
  return static_cast<std::size_t>(
      std::count_if(d.values.begin(), d.values.end(), [floor](double v) { return v >= floor; }));
}

nlohmann::json params_to_json(const CircuitParams &params) {
  return {{"theta_enc", params.theta_enc},
          {"theta_ent", params.theta_ent},
          {"theta_mix", params.theta_mix},
          {"reps", params.reps}};
}

CircuitParams params_from_json(const nlohmann::json &j) {
  CircuitParams p;
  try {
    p.theta_enc = j.value("theta_enc", p.theta_enc);
    p.theta_ent = j.value("theta_ent", p.theta_ent);
    p.theta_mix = j.value("theta_mix", p.theta_mix);
    p.reps = j.value("reps", p.reps);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::Parse, std::string("circuit params: ") + e.what());
  }
  p.validate();
  return p;
}

nlohmann::json embedding_to_json(const SortedDistribution &d, const CircuitParams &params,
                                 std::uint64_t graph_hash) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(graph_hash));
  return {{"values", d.values},
          {"k", d.head_len},
          {"n", d.source_n},
          {"params", params_to_json(params)},
          {"graph_hash", hex}};
}

}  // namespace quic
