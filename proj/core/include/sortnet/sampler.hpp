#pragma once

#include <cstdint>
#include <vector>

#include "sortnet/hook_formula.hpp"
#include "sortnet/network.hpp"
#include "sortnet/rng.hpp"
#include "sortnet/tableau.hpp"
#include "sortnet/young_diagram.hpp"

namespace sortnet {

// Relative tolerance on the per-step corner weights: they must sum to
// |lambda| (probabilities sum to 1) before renormalization.
inline constexpr double kChainDriftTolerance = 1e-9;

// The Markov chain lambda^0 > lambda^1 > ... of shrinking diagrams obtained
// by removing the box of the current largest entry. Step t removes a corner
// of the current diagram with the hook-ratio law of
// corner_removal_distribution.
//
// Corner weights prod h/(h-1) are maintained incrementally: removing (i, j)
// only shortens hooks in row i and column j, so each other corner's weight
// changes by at most one factor and each step costs O(rows) plus the co-hook
// length of at most two new corners.
class ShrinkingChain {
 public:
  explicit ShrinkingChain(const YoungDiagram& start, bool keep_history = false);

  [[nodiscard]] YoungDiagram current() const;
  [[nodiscard]] int step() const { return step_; }
  [[nodiscard]] int remaining() const { return remaining_; }
  [[nodiscard]] const std::vector<Box>& history() const { return history_; }

  // Current corners with renormalized probabilities, row-major.
  [[nodiscard]] std::vector<CornerProbability<double>> distribution() const;

  // Inverse CDF over the row-major corner order; u in [0, 1).
  [[nodiscard]] Box draw(double u) const;

  // Removes a corner of the current diagram; throws DomainError otherwise.
  void remove(const Box& corner);

  // Draws one corner with one uniform variate and removes it.
  Box advance(SeededRng& rng);

 private:
  int row_length(int i) const;
  double fresh_weight(int row) const;
  double total_weight() const;

  std::vector<int> rows_;    // row lengths, zero-padded
  std::vector<int> cols_;    // column lengths
  std::vector<double> weight_;  // corner weight of row i (0 if no corner)
  std::vector<Box> history_;
  int remaining_ = 0;
  int step_ = 0;
  bool keep_history_ = false;
};

// Uniform standard tableau of the given shape: entries |lambda|, ..., 1 are
// assigned to the corners removed by the chain. Throws DomainError on the
// empty shape.
StandardTableau sample_uniform_syt(const YoungDiagram& shape, SeededRng& rng);

// Uniform sorting network of size n >= 2 via a uniform staircase tableau and
// the Edelman-Greene map.
SortingNetwork sample_random_network(int n, SeededRng& rng);

// count samples; sample i uses SeededRng(seed, i), so the result is a pure
// function of (shape, count, seed) regardless of `jobs`.
std::vector<StandardTableau> sample_batch(const YoungDiagram& shape, int count,
                                          std::uint64_t seed, int jobs = 1);

std::vector<SortingNetwork> sample_network_batch(int n, int count,
                                                 std::uint64_t seed,
                                                 int jobs = 1);

}  // namespace sortnet
