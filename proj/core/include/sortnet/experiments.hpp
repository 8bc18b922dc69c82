#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sortnet/network.hpp"
#include "sortnet/patterns.hpp"
#include "sortnet/report.hpp"
#include "sortnet/tableau.hpp"

// Monte Carlo drivers for the scaling experiments. Sample i at size n draws
// from SeededRng(seed, (n << 32) | i), so every report is a pure function of
// its parameters and seed, independent of the number of worker threads.
namespace sortnet {

std::uint64_t sample_stream(int n, int index);

// m = floor((n-1)/(2k-2)) translates of staircase(k) along the border
// diagonal of staircase(n), occupying columns floor(n/4)+1 .. floor(n/4)+M
// with M = m(k-1) and no gaps between consecutive motifs.
struct DiagonalMotifLayout {
  int k = 0;
  int n = 0;
  int m = 0;
  int column_offset = 0;
  std::vector<Box> anchors;  // top-left box of each motif

  [[nodiscard]] int total_columns() const { return m * (k - 1); }
  // Boxes of motif a (0-based), row-major.
  [[nodiscard]] std::vector<Box> motif_boxes(int a) const;
};

// Throws DomainError unless k >= 2 and n >= 4(k-1).
DiagonalMotifLayout make_diagonal_layout(int k, int n);

struct RunOptions {
  std::vector<int> ns;
  int samples = 200;
  std::uint64_t seed = 1;
  int jobs = 1;
};

struct MotifOptions : RunOptions {
  // If set, a motif only counts when all its entries exceed N - cutoff * n.
  std::optional<double> cutoff;
};

// Per sampled staircase(n) tableau: number of diagonal motifs whose
// subtableau is identically ordered with `motif` (a staircase(k) tableau).
// Extras: m, mean_over_m, depth_mean and depth_max of (N - min entry) / n
// over qualifying motifs.
ExperimentReport experiment_diagonal_motifs(const StandardTableau& motif,
                                            const MotifOptions& options);

struct PatternOptions : RunOptions {
  double prefix_c = 1.0;  // time prefix [1, ceil(prefix_c * n)]
};

// Per sampled network: greedy disjoint count of canonical-width occurrences.
// Extras: mean_over_n2 and prefix_mean_over_n (occurrences inside the time
// prefix, divided by n).
ExperimentReport experiment_pattern_counts(const Pattern& pattern,
                                           const PatternOptions& options);

// Per sampled network: 1 if certify_nonrealizable finds a witness, else 0.
// Extras: fraction, sigma, and a 95% Wilson interval (ci_low, ci_high).
ExperimentReport experiment_certificates(const SortingNetwork& gp,
                                         const RunOptions& options);

struct StationarityResult {
  int n = 0;
  int networks = 0;
  // frequency[t-1][j-1] = number of networks with s_t = j
  std::vector<std::vector<long long>> frequency;
  bool first_two_equal = false;
  bool all_equal = false;
};

// Exhaustive over all networks of size n <= 5.
StationarityResult stationarity(int n);
ExperimentReport experiment_stationarity(const std::vector<int>& ns);

}  // namespace sortnet
