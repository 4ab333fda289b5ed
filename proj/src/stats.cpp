#include "quic/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quic/embed.hpp"
#include "quic/error.hpp"

namespace quic {

void SeparationConfig::validate() const {
  if (subsample == 0) throw InvalidParameter("subsample", "must be >= 1");
  if (repeats < 2) throw InvalidParameter("repeats", "must be >= 2");
  if (!std::isfinite(threshold)) throw InvalidParameter("threshold", "must be finite");
}

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return s / static_cast<double>(xs.size() - 1);
}

double percentile(std::vector<double> xs, double q) {
  if (xs.empty()) throw InvalidParameter("xs", "percentile of an empty sample");
  if (!(q >= 0.0 && q <= 100.0)) throw InvalidParameter("q", "must lie in [0, 100]");
  std::sort(xs.begin(), xs.end());
  const double pos = q / 100.0 * static_cast<double>(xs.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, xs.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return xs[lo] + frac * (xs[hi] - xs[lo]);
}

double histogram_distance(const CountsHistogram &x, const CountsHistogram &y, Alignment alignment,
                          std::size_t head) {
  if (alignment == Alignment::Aligned) return aligned_l1(x, y);
  return l1_distance(embed_counts(x, head), embed_counts(y, head));
}

namespace {

void require_shots(const CountsHistogram &h, std::uint64_t m, const char *which) {
  if (h.total() < m) {
    throw Error(ErrorCode::InsufficientShots, std::string(which) + " has " +
                                                  std::to_string(h.total()) +
                                                  " shots; subsample needs " + std::to_string(m));
  }
}

}  // namespace

SeparationReport separation_test(const CountsHistogram &a, const CountsHistogram &b,
                                 const SeparationConfig &config) {
  config.validate();
  require_shots(a, config.subsample, "histogram a");
  require_shots(b, config.subsample, "histogram b");
  if (config.alignment == Alignment::Aligned && a.num_qubits != b.num_qubits) {
    throw Error(ErrorCode::LengthMismatch, "aligned comparison needs equal register widths");
  }

  SeparationReport r;
  r.config = config;
  r.shots_a = a.total();
  r.shots_b = b.total();

  ShotPool pool_a(a);
  ShotPool pool_b(b);
  Rng rng = make_rng(derive_seed(config.seed, 0x5e9a));
  const std::uint64_t m = config.subsample;
  for (std::size_t i = 0; i < config.repeats; ++i) {
    ShotPool &src = (i % 2 == 0) ? pool_a : pool_b;
    const auto x = src.draw(m, rng);
    const auto y = src.draw(m, rng);
    r.null_l1.push_back(histogram_distance(x, y, config.alignment, config.head));

    const auto u = pool_a.draw(m, rng);
    const auto v = pool_b.draw(m, rng);
    r.signal_l1.push_back(histogram_distance(u, v, config.alignment, config.head));
  }

  r.mu_null = mean(r.null_l1);
  r.mu_signal = mean(r.signal_l1);
  r.sigma_pooled = std::sqrt((sample_variance(r.null_l1) + sample_variance(r.signal_l1)) / 2.0);
  if (r.sigma_pooled == 0.0) {
    r.degenerate = true;
    if (r.mu_signal > r.mu_null) {
      r.z = std::numeric_limits<double>::infinity();
    } else if (r.mu_signal < r.mu_null) {
      r.z = -std::numeric_limits<double>::infinity();
    } else {
      r.z = 0.0;
    }
  } else {
    r.z = (r.mu_signal - r.mu_null) / r.sigma_pooled;
  }
  r.pass = r.z > config.threshold;
  return r;
}

std::vector<double> null_distances(const CountsHistogram &h, const SeparationConfig &config) {
  config.validate();
  require_shots(h, config.subsample, "histogram");
  ShotPool pool(h);
  Rng rng = make_rng(derive_seed(config.seed, 0x6e75));
  std::vector<double> out;
  out.reserve(config.repeats);
  for (std::size_t i = 0; i < config.repeats; ++i) {
    const auto x = pool.draw(config.subsample, rng);
    const auto y = pool.draw(config.subsample, rng);
    out.push_back(histogram_distance(x, y, config.alignment, config.head));
  }
  return out;
}

double null_percentile_threshold(const CountsHistogram &h, double q,
                                 const SeparationConfig &config) {
  return percentile(null_distances(h, config), q);
}

nlohmann::json to_json(const SeparationConfig &config) {
  return {{"subsample", config.subsample},
          {"repeats", config.repeats},
          {"head", config.head},
          {"seed", config.seed},
          {"threshold", config.threshold},
          {"alignment", config.alignment == Alignment::Sorted ? "sorted" : "aligned"}};
}

namespace {

nlohmann::json finite_or_string(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

}  // namespace

nlohmann::json to_json(const SeparationReport &report) {
  return {{"null_l1", report.null_l1},
          {"signal_l1", report.signal_l1},
          {"mu_null", report.mu_null},
          {"mu_signal", report.mu_signal},
          {"sigma_pooled", report.sigma_pooled},
          {"z", finite_or_string(report.z)},
          {"pass", report.pass},
          {"degenerate", report.degenerate},
          {"shots_a", report.shots_a},
          {"shots_b", report.shots_b},
          {"config", to_json(report.config)}};
}

}  // namespace quic
