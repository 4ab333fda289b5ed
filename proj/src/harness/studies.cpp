#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

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

CountsHistogram draw_histogram(std::discrete_distribution<std::uint64_t> &dist, std::size_t n,
                               std::uint64_t shots, Rng &rng) {
  CountsHistogram h;
  h.num_qubits = n;
  for (std::uint64_t s = 0; s < shots; ++s) ++h.counts[dist(rng)];
  return h;
}

Graph rewired_partner(const Graph &g, std::size_t swaps, std::uint64_t seed) {
  Graph h = g;
  for (std::size_t i = 0; i < swaps || is_isomorphic(g, h); ++i) {
    h = rewire_degree_preserving(h, 1000, derive_seed(seed, i));
  }
  return h;
}

std::ostringstream csv_stream() {
  std::ostringstream out;
  out.precision(12);
  return out;
}

}  // namespace

std::vector<BroomRow> run_broom_study(const BroomOptions &options) {
  if (options.null_pairs < 1) throw InvalidParameter("null_pairs", "must be >= 1");
  if (options.shots < 1) throw InvalidParameter("shots", "must be >= 1");
  const Graph base = broom_graph(options.n, options.pendants);
  const Graph variant = broom_graph(options.n, options.pendants, true);
  const std::size_t path = options.n - 1 - options.pendants;

  std::vector<BroomRow> rows;
  for (std::size_t r : options.reps) {
    CircuitParams params = options.params;
    params.reps = r;
    const auto pa = exact(base, params);
    const auto pb = exact(variant, params);
    for (std::size_t h = 0; h <= path; ++h) {
      std::vector<std::size_t> keep(options.pendants + 1 + h);
      std::iota(keep.begin(), keep.end(), std::size_t{0});
      const auto ma = marginalize(pa, keep);
      const auto mb = marginalize(pb, keep);

      BroomRow row;
      row.reps = r;
      row.cutoff = h;
      row.qubits = keep.size();
      row.exact_l1 = aligned_l1(ma, mb);
      row.sorted_l1 = l1_distance(embed_distribution(ma, 0), embed_distribution(mb, 0));

      std::discrete_distribution<std::uint64_t> dist(ma.begin(), ma.end());
      Rng rng = make_rng(derive_seed(options.seed, 100 * r + h));
      std::vector<double> nulls;
      for (std::size_t i = 0; i < options.null_pairs; ++i) {
        const auto x = draw_histogram(dist, keep.size(), options.shots, rng);
        const auto y = draw_histogram(dist, keep.size(), options.shots, rng);
        nulls.push_back(aligned_l1(x, y));
      }
      row.null_95 = percentile(nulls, 95.0);
      rows.push_back(row);
    }
  }
  return rows;
}

std::optional<std::size_t> broom_crossing(const std::vector<BroomRow> &rows, std::size_t reps) {
  std::optional<std::size_t> best;
  for (const auto &row : rows) {
    if (row.reps != reps || row.exact_l1 > row.null_95) continue;
    if (!best || row.qubits < *best) best = row.qubits;
  }
  return best;
}

std::string broom_csv(const std::vector<BroomRow> &rows) {
  auto out = csv_stream();
  out << "reps,cutoff,qubits,exact_l1,sorted_l1,null_95\n";
  for (const auto &r : rows) {
    out << r.reps << ',' << r.cutoff << ',' << r.qubits << ',' << r.exact_l1 << ','
        << r.sorted_l1 << ',' << r.null_95 << '\n';
  }
  return out.str();
}

std::string to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::Enc: return "enc";
    case SweepAxis::Ent: return "ent";
    case SweepAxis::Mix: return "mix";
    case SweepAxis::Reps: return "reps";
  }
  return "unknown";
}

SweepAxis parse_axis(std::string_view text) {
  for (SweepAxis a : {SweepAxis::Enc, SweepAxis::Ent, SweepAxis::Mix, SweepAxis::Reps}) {
    if (text == to_string(a)) return a;
  }
  throw InvalidParameter("axis", "expected enc, ent, mix or reps");
}

std::vector<double> parse_grid(std::string_view text) {
  auto number = [](std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
      throw InvalidParameter("grid", "bad number '" + std::string(s) + "'");
    }
    return v;
  };
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    std::vector<double> parts;
    std::size_t start = 0;
    while (true) {
      const auto pos = text.find(':', start);
      parts.push_back(number(text.substr(start, pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    if (parts.size() != 3) throw InvalidParameter("grid", "range form is lo:hi:step");
    const double lo = parts[0], hi = parts[1], step = parts[2];
    if (step <= 0.0 || hi < lo) throw InvalidParameter("grid", "need step > 0 and hi >= lo");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) out.push_back(lo + static_cast<double>(i) * step);
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto pos = text.find(',', start);
      out.push_back(number(text.substr(start, pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
  }
  if (out.empty()) throw InvalidParameter("grid", "empty grid");
  return out;
}

std::vector<std::pair<Graph, Graph>> default_sweep_instances(SweepAxis axis, std::uint64_t seed) {
  std::vector<std::pair<Graph, Graph>> out;
  for (std::size_t n : {8, 10, 12}) {
    for (std::uint64_t i = 0; i < 3; ++i) {
      const Graph g = erdos_renyi(n, 0.4, derive_seed(seed, 1000 * n + i));
      out.emplace_back(g, rewired_partner(g, 10, derive_seed(seed, 5000 * n + i)));
      if (axis == SweepAxis::Reps) {
        const Graph b = barabasi_albert(n, 2, derive_seed(seed, 2000 * n + i));
        out.emplace_back(b, rewired_partner(b, 10, derive_seed(seed, 6000 * n + i)));
      }
    }
  }
  return out;
}

std::vector<SweepRow> run_sweep(SweepAxis axis, const std::vector<double> &grid,
                                const std::vector<std::pair<Graph, Graph>> &instances,
                                const CircuitParams &base, const SamplingConfig &sampling,
                                std::uint64_t seed) {
  if (grid.empty()) throw InvalidParameter("grid", "empty grid");
  if (instances.empty()) throw InvalidParameter("instances", "empty instance set");
  std::vector<SweepRow> rows;
  for (double value : grid) {
    CircuitParams p = base;
    switch (axis) {
      case SweepAxis::Enc: p.theta_enc = value; break;
      case SweepAxis::Ent: p.theta_ent = value; break;
      case SweepAxis::Mix: p.theta_mix = value; break;
      case SweepAxis::Reps:
        if (value < 1.0 || value != std::floor(value)) {
          throw InvalidParameter("reps", "grid values must be positive integers");
        }
        p.reps = static_cast<std::size_t>(value);
        break;
    }
    p.validate();

    SweepRow row;
    row.value = value;
    row.instances = instances.size();
    row.worst_z = std::numeric_limits<double>::infinity();
    std::vector<double> zs, tvs;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const auto &[a, b] = instances[i];
      if (axis == SweepAxis::Reps) {
        tvs.push_back(tv_distance(embed_distribution(exact(a, p), 0), embed_distribution(exact(b, p), 0)));
        continue;
      }
      const auto r = compare_graphs(a, b, p, sampling, std::nullopt, derive_seed(seed, i));
      tvs.push_back(r.exact_l1 / 2.0);
      zs.push_back(r.report->z);
      row.worst_z = std::min(row.worst_z, r.report->z);
    }
    row.mean_tv = mean(tvs);
    if (zs.empty()) {
      row.worst_z = 0.0;
    } else {
      row.mean_z = mean(zs);
    }
    rows.push_back(row);
  }

  if (rows.size() > 1) {
    const bool by_tv = axis == SweepAxis::Reps;
    std::stable_sort(rows.begin(), rows.end(), [by_tv](const SweepRow &x, const SweepRow &y) {
      return by_tv ? x.mean_tv > y.mean_tv : x.mean_z > y.mean_z;
    });
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].rank = i + 1;
  }
  return rows;
}

std::string sweep_csv(SweepAxis axis, const std::vector<SweepRow> &rows) {
  auto out = csv_stream();
  out << "rank," << to_string(axis) << ",mean_z,worst_z,mean_tv,instances\n";
  for (const auto &r : rows) {
    out << r.rank << ',' << r.value << ',' << r.mean_z << ',' << r.worst_z << ',' << r.mean_tv
        << ',' << r.instances << '\n';
  }
  return out.str();
}

std::vector<NoiseScalingRow> noise_scaling(const Graph &a, const Graph &b,
                                           const CircuitParams &params, const NoiseSpec &start,
                                           std::string_view which, double factor,
                                           std::size_t steps, std::size_t trajectories,
                                           std::size_t head, std::uint64_t seed) {
  double NoiseSpec::*field = nullptr;
  if (which == "p1") {
    field = &NoiseSpec::p1;
  } else if (which == "p2") {
    field = &NoiseSpec::p2;
  } else if (which == "p_ro") {
    field = &NoiseSpec::p_ro;
  } else {
    throw InvalidParameter("which", "expected p1, p2 or p_ro");
  }
  std::vector<NoiseScalingRow> rows;
  NoiseSpec noise = start;
  for (std::size_t k = 0; k <= steps; ++k) {
    noise.validate();
    const auto pa = expected_noisy_distribution(a, params, noise, trajectories, seed);
    const auto pb = expected_noisy_distribution(b, params, noise, trajectories, seed);
    rows.push_back({noise, l1_distance(embed_distribution(pa, head), embed_distribution(pb, head))});
    noise.*field *= factor;
  }
  return rows;
}

std::vector<ShotScalingRow> shot_scaling(const Graph &a, const Graph &b,
                                         const CircuitParams &params,
                                         const std::vector<std::uint64_t> &shots,
                                         std::size_t repeats, std::size_t head,
                                         std::uint64_t seed) {
  if (repeats < 2) throw InvalidParameter("repeats", "must be >= 2");
  const auto pa = exact(a, params);
  const auto pb = exact(b, params);
  std::vector<ShotScalingRow> rows;
  for (std::uint64_t n : shots) {
    Rng rng = make_rng(derive_seed(seed, n));
    std::vector<double> nulls, signals;
    for (std::size_t i = 0; i < repeats; ++i) {
      const auto x = sample_counts(pa, n, rng);
      const auto y = sample_counts(pa, n, rng);
      const auto u = sample_counts(pa, n, rng);
      const auto v = sample_counts(pb, n, rng);
      nulls.push_back(histogram_distance(x, y, Alignment::Sorted, head));
      signals.push_back(histogram_distance(u, v, Alignment::Sorted, head));
    }
    rows.push_back({n, mean(nulls), std::sqrt(sample_variance(nulls)), mean(signals),
                    std::sqrt(sample_variance(signals))});
  }
  return rows;
}

std::string shot_scaling_csv(const std::vector<ShotScalingRow> &rows) {
  auto out = csv_stream();
  out << "shots,null_mean,null_sd,signal_mean,signal_sd\n";
  for (const auto &r : rows) {
    out << r.shots << ',' << r.null_mean << ',' << r.null_sd << ',' << r.signal_mean << ','
        << r.signal_sd << '\n';
  }
  return out.str();
}

std::vector<ZipfRow> zipf_table(const Graph &g, const CircuitParams &params, std::size_t k) {
  const auto d = embed_distribution(exact(g, params), 0);
  const std::size_t len = k == 0 ? d.values.size() : std::min(k, d.values.size());
  std::vector<ZipfRow> rows;
  double cumulative = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    cumulative += d.values[i];
    rows.push_back({i + 1, d.values[i], cumulative});
  }
  return rows;
}

std::string zipf_csv(const std::vector<ZipfRow> &rows) {
  auto out = csv_stream();
  out << "rank,probability,cumulative\n";
  for (const auto &r : rows) out << r.rank << ',' << r.probability << ',' << r.cumulative << '\n';
  return out.str();
}

}  // namespace quic
