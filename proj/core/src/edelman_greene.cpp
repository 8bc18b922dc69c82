#include "sortnet/edelman_greene.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "sortnet/error.hpp"

namespace sortnet {

namespace {

int require_staircase(const YoungDiagram& shape) {
  const auto n = shape.staircase_size();
  if (!n) {
    throw DomainError("shape " + to_string(shape) + " is not a staircase");
  }
  return *n;
}

std::vector<int> staircase_offsets(int n) {
  std::vector<int> offset(n, 0);
  for (int i = 1; i < n; ++i) {
    offset[i] = offset[i - 1] + (n - i);
  }
  return offset;
}

}  // namespace

EdelmanGreeneSlider::EdelmanGreeneSlider(const StandardTableau& tableau)
    : n_(require_staircase(tableau.shape())),
      total_(tableau.size()),
      offset_(staircase_offsets(n_)),
      grid_(total_),
      position_(tableau.positions()) {
  for (int i = 1; i < n_; ++i) {
    for (int j = 1; j <= n_ - i; ++j) {
      cell(i, j) = tableau.rows()[i - 1][j - 1];
    }
  }
  emitted_.reserve(total_);
}

int EdelmanGreeneSlider::value(int i, int j) const {
  if (i < 1 || j < 1 || i + j > n_) return 0;
  return grid_[offset_[i - 1] + j - 1];
}

int EdelmanGreeneSlider::advance() {
  if (done()) {
    throw DomainError("sliding already finished");
  }
  const int max_value = total_ - step();
  Box x = position_[max_value];
  if (x.row + x.col != n_) {
    throw InternalError("maximal entry is not on the staircase border");
  }
  const int swap = x.col;
  for (;;) {
    const int up = value(x.row - 1, x.col);
    const int left = value(x.row, x.col - 1);
    if (up == 0 && left == 0) {
      cell(x.row, x.col) = 0;
      break;
    }
    const Box next = up > left ? Box{x.row - 1, x.col} : Box{x.row, x.col - 1};
    const int moved = std::max(up, left);
    cell(x.row, x.col) = moved;
    position_[moved] = x;
    x = next;
  }
  emitted_.push_back(swap);
  return swap;
}

SkewFilling EdelmanGreeneSlider::state() const {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i < n_; ++i) {
    rows.emplace_back(grid_.begin() + offset_[i - 1],
                      grid_.begin() + offset_[i - 1] + (n_ - i));
  }
  return SkewFilling(YoungDiagram::staircase(n_), std::move(rows));
}

SortingNetwork eg_forward(const StandardTableau& tableau) {
  EdelmanGreeneSlider slider(tableau);
  while (!slider.done()) slider.advance();
  return SortingNetwork(slider.n(), slider.emitted());
}

namespace {

// Edelman-Greene (Coxeter-Knuth) row insertion of letter x into the
// insertion tableau; returns the row that grew.
int eg_insert(std::vector<std::vector<int>>& rows, int x) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({x});
      return static_cast<int>(r);
    }
    auto& row = rows[r];
    const auto bigger = std::upper_bound(row.begin(), row.end(), x);
    if (bigger == row.end()) {
      row.push_back(x);
      return static_cast<int>(r);
    }
    if (*bigger == x + 1 && bigger != row.begin() && *(bigger - 1) == x) {
      x = x + 1;  // x and x+1 both present: row unchanged, bump x+1
    } else {
      std::swap(*bigger, x);
    }
  }
}

}  // namespace

// Sliding loses the order in which boxes were vacated, so the inverse is
// computed as the recording tableau of Edelman-Greene insertion of the
// reversed word; the round-trip tests pin this to eg_forward.
StandardTableau eg_inverse(const SortingNetwork& network) {
  const int n = network.n();
  if (n < 2) {
    throw DomainError("inverse Edelman-Greene needs a network of size >= 2");
  }
  std::vector<std::vector<int>> insertion;
  std::vector<std::vector<int>> recording;
  const int total = network.length();
  for (int t = 1; t <= total; ++t) {
    const auto r = static_cast<std::size_t>(eg_insert(insertion, network.at(total - t + 1)));
    if (r == recording.size()) recording.emplace_back();
    recording[r].push_back(t);
  }
  StandardTableau result(std::move(recording));
  if (result.shape() != YoungDiagram::staircase(n)) {
    throw InternalError("insertion of a sorting network did not give a staircase");
  }
  return result;
}

std::vector<SortingNetwork> all_networks(int n, int cap) {
  if (n < 2) {
    throw DomainError("network size must be at least 2");
  }
  std::vector<SortingNetwork> out;
  for_each_syt(YoungDiagram::staircase(n),
               [&](const StandardTableau& t) { out.push_back(eg_forward(t)); },
               cap);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sortnet
