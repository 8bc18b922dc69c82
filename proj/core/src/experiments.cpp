#include "sortnet/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "sortnet/edelman_greene.hpp"
#include "sortnet/error.hpp"
#include "sortnet/geometry.hpp"
#include "sortnet/parallel.hpp"
#include "sortnet/sampler.hpp"

namespace sortnet {

std::uint64_t sample_stream(int n, int index) {
  return (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint32_t>(index);
}

std::vector<Box> DiagonalMotifLayout::motif_boxes(int a) const {
  std::vector<Box> out;
  const Box top = anchors.at(a);
  for (int p = 0; p < k - 1; ++p) {
    for (int q = 0; q < k - 1 - p; ++q) {
      out.push_back({top.row + p, top.col + q});
    }
  }
  return out;
}

DiagonalMotifLayout make_diagonal_layout(int k, int n) {
  if (k < 2) {
    throw DomainError("motif size must be at least 2");
  }
  if (n < 4 * (k - 1)) {
    throw DomainError("n=" + std::to_string(n) +
                      " is too small for motifs of size " + std::to_string(k) +
                      " (need n >= " + std::to_string(4 * (k - 1)) + ")");
  }
  DiagonalMotifLayout layout;
  layout.k = k;
  layout.n = n;
  layout.m = (n - 1) / (2 * k - 2);
  layout.column_offset = n / 4;
  for (int a = 0; a < layout.m; ++a) {
    const int col = layout.column_offset + 1 + a * (k - 1);
    // bottom-left box (row + k - 2, col) sits on the border row + col = n
    const int row = n - col - k + 2;
    layout.anchors.push_back({row, col});
  }
  return layout;
}

namespace {

template <typename Clock = std::chrono::steady_clock>
double seconds_since(typename Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_sizes(const RunOptions& options) {
  if (options.ns.empty()) throw DomainError("no n values given");
  if (options.samples < 1) throw DomainError("samples must be at least 1");
  for (int n : options.ns) {
    if (n < 2) throw DomainError("n must be at least 2");
  }
}

nlohmann::json base_params(const RunOptions& options) {
  return {{"n", options.ns},
          {"samples", options.samples},
          {"seed", options.seed}};
}

}  // namespace

ExperimentReport experiment_diagonal_motifs(const StandardTableau& motif,
                                            const MotifOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_sizes(options);
  const auto k = motif.shape().staircase_size();
  if (!k) throw DomainError("motif must have staircase shape");
  const Filling reference = Filling::from_tableau(motif);

  ExperimentReport report;
  report.experiment = "t2";
  report.params = base_params(options);
  report.params["k"] = *k;
  report.params["motif"] = motif.rows();
  if (options.cutoff) report.params["cutoff"] = *options.cutoff;

  for (int n : options.ns) {
    const auto layout = make_diagonal_layout(*k, n);
    const int total = static_cast<int>(network_length(n));
    const auto shape = YoungDiagram::staircase(n);
    std::vector<double> counts(options.samples);
    std::vector<std::vector<double>> depths(options.samples);
    parallel_for(options.samples, options.jobs, [&](std::size_t i) {
      SeededRng rng(options.seed, sample_stream(n, static_cast<int>(i)));
      const auto t = sample_uniform_syt(shape, rng);
      int count = 0;
      for (int a = 0; a < layout.m; ++a) {
        std::vector<Filling::Cell> cells;
        int min_entry = total;
        for (const Box& b : layout.motif_boxes(a)) {
          const int v = t.at(b);
          cells.push_back({b, v});
          min_entry = std::min(min_entry, v);
        }
        if (!identically_ordered(reference, Filling(std::move(cells)))) continue;
        if (options.cutoff && !(min_entry > total - *options.cutoff * n)) continue;
        ++count;
        depths[i].push_back(static_cast<double>(total - min_entry) / n);
      }
      counts[i] = count;
    });
    PerNResult r{n, std::move(counts), {}};
    r.extras["m"] = layout.m;
    r.extras["mean_over_m"] = r.mean() / layout.m;
    double depth_sum = 0.0;
    double depth_max = 0.0;
    std::size_t depth_count = 0;
    for (const auto& d : depths) {
      for (double v : d) {
        depth_sum += v;
        depth_max = std::max(depth_max, v);
        ++depth_count;
      }
    }
    r.extras["depth_mean"] = depth_count ? depth_sum / depth_count : 0.0;
    r.extras["depth_max"] = depth_max;
    report.per_n.push_back(std::move(r));
  }
  report.wall_clock_seconds = seconds_since(start);
  return report;
}

ExperimentReport experiment_pattern_counts(const Pattern& pattern,
                                           const PatternOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_sizes(options);
  ExperimentReport report;
  report.experiment = "t1";
  report.params = base_params(options);
  report.params["pattern"] = pattern.swaps();
  report.params["prefix_c"] = options.prefix_c;
  report.params["counting"] = "greedy";

  for (int n : options.ns) {
    const int prefix = static_cast<int>(std::ceil(options.prefix_c * n));
    std::vector<double> counts(options.samples);
    std::vector<double> prefix_counts(options.samples);
    parallel_for(options.samples, options.jobs, [&](std::size_t i) {
      SeededRng rng(options.seed, sample_stream(n, static_cast<int>(i)));
      const auto network = sample_random_network(n, rng);
      const auto occ = find_occurrences(network, pattern);
      counts[i] = count_disjoint_greedy(occ);
      prefix_counts[i] = count_disjoint_greedy(occurrences_before(occ, prefix));
    });
    PerNResult r{n, std::move(counts), {}};
    const double n2 = static_cast<double>(n) * n;
    r.extras["mean_over_n2"] = r.mean() / n2;
    double prefix_sum = 0.0;
    for (double v : prefix_counts) prefix_sum += v;
    r.extras["prefix_mean_over_n"] = prefix_sum / options.samples / n;
    report.per_n.push_back(std::move(r));
  }
  report.wall_clock_seconds = seconds_since(start);
  return report;
}

ExperimentReport experiment_certificates(const SortingNetwork& gp,
                                         const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_sizes(options);
  ExperimentReport report;
  report.experiment = "t3";
  report.params = base_params(options);
  report.params["gp_pattern"] = gp.swaps();

  for (int n : options.ns) {
    std::vector<double> hits(options.samples);
    parallel_for(options.samples, options.jobs, [&](std::size_t i) {
      SeededRng rng(options.seed, sample_stream(n, static_cast<int>(i)));
      const auto network = sample_random_network(n, rng);
      hits[i] = certify_nonrealizable(network, gp).has_value() ? 1.0 : 0.0;
    });
    PerNResult r{n, std::move(hits), {}};
    const double p = r.mean();
    const double count = options.samples;
    r.extras["fraction"] = p;
    r.extras["sigma"] = std::sqrt(p * (1.0 - p) / count);
    // Wilson score interval, z = 1.96
    const double z = 1.96;
    const double denom = 1.0 + z * z / count;
    const double center = (p + z * z / (2 * count)) / denom;
    const double half =
        z * std::sqrt(p * (1 - p) / count + z * z / (4 * count * count)) / denom;
    r.extras["ci_low"] = std::max(0.0, center - half);
    r.extras["ci_high"] = std::min(1.0, center + half);
    report.per_n.push_back(std::move(r));
  }
  report.wall_clock_seconds = seconds_since(start);
  return report;
}

StationarityResult stationarity(int n) {
  if (n < 2 || n > 5) {
    throw DomainError("exhaustive stationarity check supports 2 <= n <= 5");
  }
  StationarityResult result;
  result.n = n;
  const int total = static_cast<int>(network_length(n));
  result.frequency.assign(total, std::vector<long long>(n - 1, 0));
  for (const auto& network : all_networks(n)) {
    ++result.networks;
    for (int t = 1; t <= total; ++t) {
      ++result.frequency[t - 1][network.at(t) - 1];
    }
  }
  result.first_two_equal = total < 2 || result.frequency[0] == result.frequency[1];
  result.all_equal = std::all_of(
      result.frequency.begin(), result.frequency.end(),
      [&](const auto& f) { return f == result.frequency.front(); });
  return result;
}

ExperimentReport experiment_stationarity(const std::vector<int>& ns) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport report;
  report.experiment = "stationarity";
  report.params = {{"n", ns}};
  for (int n : ns) {
    const auto s = stationarity(n);
    PerNResult r;
    r.n = n;
    for (long long f : s.frequency.front()) r.raw.push_back(static_cast<double>(f));
    r.extras["networks"] = s.networks;
    r.extras["s1_equals_s2"] = s.first_two_equal ? 1.0 : 0.0;
    r.extras["all_times_equal"] = s.all_equal ? 1.0 : 0.0;
    report.per_n.push_back(std::move(r));
  }
  report.wall_clock_seconds = seconds_since(start);
  return report;
}

}  // namespace sortnet
