#include "sortnet/hook_formula.hpp"

#include <algorithm>
#include <cstdlib>

#include "sortnet/error.hpp"

namespace sortnet {

namespace {

// Hook length from precomputed column lengths.
int hook(const YoungDiagram& d, const std::vector<int>& cols, int i, int j) {
  return d.row_length(i) - j + cols[j - 1] - i + 1;
}

void require_corner(const YoungDiagram& d, const Box& x) {
  if (!is_corner(d, x)) {
    throw DomainError("box " + to_string(x) + " is not a corner of " +
                      to_string(d));
  }
}

double corner_weight(const YoungDiagram& d, const std::vector<int>& cols,
                     const Box& x) {
  double w = 1.0;
  for (int i = 1; i < x.row; ++i) {
    const double h = hook(d, cols, i, x.col);
    w *= h / (h - 1.0);
  }
  for (int j = 1; j < x.col; ++j) {
    const double h = hook(d, cols, x.row, j);
    w *= h / (h - 1.0);
  }
  return w;
}

Rational corner_weight_exact(const YoungDiagram& d, const std::vector<int>& cols,
                             const Box& x) {
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 1; i < x.row; ++i) {
    const int h = hook(d, cols, i, x.col);
    num *= h;
    den *= h - 1;
  }
  for (int j = 1; j < x.col; ++j) {
    const int h = hook(d, cols, x.row, j);
    num *= h;
    den *= h - 1;
  }
  return Rational(num, den);
}

}  // namespace

BigInt dimension(const YoungDiagram& diagram) {
  const auto cols = diagram.column_lengths();
  BigInt numerator = 1;
  for (int k = 2; k <= diagram.size(); ++k) {
    numerator *= k;
  }
  BigInt denominator = 1;
  for (int i = 1; i <= diagram.num_rows(); ++i) {
    for (int j = 1; j <= diagram.row_length(i); ++j) {
      denominator *= hook(diagram, cols, i, j);
    }
  }
  return numerator / denominator;
}

std::vector<CornerProbability<double>> corner_removal_distribution(
    const YoungDiagram& diagram) {
  if (diagram.empty()) {
    throw DomainError("corner distribution of the empty diagram");
  }
  const auto cols = diagram.column_lengths();
  std::vector<CornerProbability<double>> out;
  for (const Box& x : corners(diagram)) {
    out.push_back({x, corner_weight(diagram, cols, x) / diagram.size()});
  }
  return out;
}

std::vector<CornerProbability<Rational>> corner_removal_distribution_exact(
    const YoungDiagram& diagram) {
  if (diagram.empty()) {
    throw DomainError("corner distribution of the empty diagram");
  }
  const auto cols = diagram.column_lengths();
  std::vector<CornerProbability<Rational>> out;
  for (const Box& x : corners(diagram)) {
    out.push_back({x, corner_weight_exact(diagram, cols, x) /
                          Rational(diagram.size())});
  }
  return out;
}

Rational corner_probability_exact(const YoungDiagram& diagram, const Box& corner) {
  require_corner(diagram, corner);
  const auto cols = diagram.column_lengths();
  return corner_weight_exact(diagram, cols, corner) / Rational(diagram.size());
}

double corner_probability_ratio(const YoungDiagram& diagram, const Box& x,
                                const Box& y) {
  require_corner(diagram, x);
  require_corner(diagram, y);
  const auto cols = diagram.column_lengths();
  return corner_weight(diagram, cols, x) / corner_weight(diagram, cols, y);
}

double corner_ratio_bound(const Box& x, const Box& y) {
  const double l = std::max(std::abs(x.row - y.row), std::abs(x.col - y.col));
  return (l + 1.0) * (2.0 * l + 1.0);
}

}  // namespace sortnet
