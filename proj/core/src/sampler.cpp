#include "sortnet/sampler.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "sortnet/edelman_greene.hpp"
#include "sortnet/error.hpp"
#include "sortnet/parallel.hpp"

namespace sortnet {

ShrinkingChain::ShrinkingChain(const YoungDiagram& start, bool keep_history)
    : rows_(start.rows()),
      cols_(start.column_lengths()),
      weight_(start.num_rows(), 0.0),
      remaining_(start.size()),
      keep_history_(keep_history) {
  rows_.push_back(0);  // sentinel so row_length(i + 1) is always valid
  for (int i = 1; i <= start.num_rows(); ++i) {
    if (row_length(i + 1) < row_length(i)) {
      weight_[i - 1] = fresh_weight(i);
    }
  }
  if (keep_history_) history_.reserve(remaining_);
}

int ShrinkingChain::row_length(int i) const {
  return (i >= 1 && i <= static_cast<int>(rows_.size())) ? rows_[i - 1] : 0;
}

// prod over the co-hook of h/(h-1) for the corner at the end of `row`.
double ShrinkingChain::fresh_weight(int row) const {
  const int col = row_length(row);
  double w = 1.0;
  for (int i = 1; i < row; ++i) {
    const double h = row_length(i) - col + cols_[col - 1] - i + 1;
    w *= h / (h - 1.0);
  }
  for (int j = 1; j < col; ++j) {
    const double h = col - j + cols_[j - 1] - row + 1;
    w *= h / (h - 1.0);
  }
  return w;
}

double ShrinkingChain::total_weight() const {
  return std::accumulate(weight_.begin(), weight_.end(), 0.0);
}

YoungDiagram ShrinkingChain::current() const {
  std::vector<int> rows;
  for (int len : rows_) {
    if (len == 0) break;
    rows.push_back(len);
  }
  return YoungDiagram(std::move(rows));
}

std::vector<CornerProbability<double>> ShrinkingChain::distribution() const {
  const double total = total_weight();
  std::vector<CornerProbability<double>> out;
  for (int i = 1; i <= static_cast<int>(weight_.size()); ++i) {
    if (weight_[i - 1] > 0.0) {
      out.push_back({{i, row_length(i)}, weight_[i - 1] / total});
    }
  }
  return out;
}

Box ShrinkingChain::draw(double u) const {
  if (remaining_ == 0) {
    throw DomainError("cannot draw from the empty diagram");
  }
  const double total = total_weight();
  if (std::abs(total / remaining_ - 1.0) > kChainDriftTolerance) {
    throw InternalError("corner weights drifted: sum " + std::to_string(total) +
                        " vs " + std::to_string(remaining_));
  }
  const double target = u * total;
  double cumulative = 0.0;
  int last = 0;
  for (int i = 1; i <= static_cast<int>(weight_.size()); ++i) {
    if (weight_[i - 1] <= 0.0) continue;
    last = i;
    cumulative += weight_[i - 1];
    if (target < cumulative) return {i, row_length(i)};
  }
  return {last, row_length(last)};  // u * total rounded up past the sum
}

void ShrinkingChain::remove(const Box& corner) {
  const int i = corner.row;
  const int j = corner.col;
  if (i < 1 || i > static_cast<int>(weight_.size()) || weight_[i - 1] <= 0.0 ||
      row_length(i) != j) {
    throw DomainError("box " + to_string(corner) +
                      " is not a corner of the current diagram");
  }
  // Hooks of (i, c) for c < j and of (r, j) for r < i shrink by one. A corner
  // (r, rows[r]) sees one of them in its co-hook: (i, rows[r]) when r > i,
  // (r, j) when r < i.
  for (int r = 1; r <= static_cast<int>(weight_.size()); ++r) {
    if (r == i || weight_[r - 1] <= 0.0) continue;
    double h;
    if (r > i) {
      const int c = row_length(r);
      h = row_length(i) - c + cols_[c - 1] - i + 1;
    } else {
      h = row_length(r) - j + cols_[j - 1] - r + 1;
    }
    // h/(h-1) becomes (h-1)/(h-2)
    weight_[r - 1] *= (h - 1.0) * (h - 1.0) / (h * (h - 2.0));
  }
  --rows_[i - 1];
  --cols_[j - 1];
  --remaining_;
  ++step_;
  weight_[i - 1] = (row_length(i) > row_length(i + 1)) ? fresh_weight(i) : 0.0;
  if (i > 1 && row_length(i - 1) == j) {
    weight_[i - 2] = fresh_weight(i - 1);
  }
  if (keep_history_) history_.push_back(corner);
}

Box ShrinkingChain::advance(SeededRng& rng) {
  const Box corner = draw(rng.uniform01());
  remove(corner);
  return corner;
}

StandardTableau sample_uniform_syt(const YoungDiagram& shape, SeededRng& rng) {
  if (shape.empty()) {
    throw DomainError("cannot sample a tableau of the empty shape");
  }
  ShrinkingChain chain(shape);
  std::vector<Box> positions(shape.size() + 1);
  for (int v = shape.size(); v >= 1; --v) {
    positions[v] = chain.advance(rng);
  }
  return tableau_from_positions(shape, positions);
}

SortingNetwork sample_random_network(int n, SeededRng& rng) {
  if (n < 2) {
    throw DomainError("network size must be at least 2");
  }
  return eg_forward(sample_uniform_syt(YoungDiagram::staircase(n), rng));
}

std::vector<StandardTableau> sample_batch(const YoungDiagram& shape, int count,
                                          std::uint64_t seed, int jobs) {
  if (count < 1) {
    throw DomainError("sample count must be at least 1");
  }
  std::vector<StandardTableau> out(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    SeededRng rng(seed, i);
    out[i] = sample_uniform_syt(shape, rng);
  });
  return out;
}

std::vector<SortingNetwork> sample_network_batch(int n, int count,
                                                 std::uint64_t seed, int jobs) {
  if (count < 1) {
    throw DomainError("sample count must be at least 1");
  }
  std::vector<SortingNetwork> out(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    SeededRng rng(seed, i);
    out[i] = sample_random_network(n, rng);
  });
  return out;
}

}  // namespace sortnet
