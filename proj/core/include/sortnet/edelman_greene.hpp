#pragma once

#include <vector>

#include "sortnet/network.hpp"
#include "sortnet/tableau.hpp"

namespace sortnet {

// Forward Edelman-Greene sliding on a staircase tableau of size n. Each step
// finds the maximal entry at (n - j, j), emits swap j, and slides the hole it
// leaves toward (1, 1) by repeatedly pulling in the larger of the entries
// above and to the left (boxes outside the staircase and vacated boxes count
// as 0). The path stops where both neighbours are 0 and that box is vacated.
class EdelmanGreeneSlider {
 public:
  // Throws DomainError for non-staircase shapes.
  explicit EdelmanGreeneSlider(const StandardTableau& tableau);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int step() const { return static_cast<int>(emitted_.size()); }
  [[nodiscard]] bool done() const { return step() == total_; }
  [[nodiscard]] const std::vector<int>& emitted() const { return emitted_; }

  // Performs one slide and returns the emitted swap position.
  int advance();

  // Current grid with zeros for vacated boxes.
  [[nodiscard]] SkewFilling state() const;

 private:
  int& cell(int i, int j) { return grid_[offset_[i - 1] + j - 1]; }
  [[nodiscard]] int value(int i, int j) const;

  int n_ = 0;
  int total_ = 0;
  std::vector<int> offset_;     // start of row i (1-based) in grid_
  std::vector<int> grid_;       // staircase entries, row-major
  std::vector<Box> position_;   // current box of each entry value
  std::vector<int> emitted_;
};

// Tableau of staircase shape -> sorting network.
SortingNetwork eg_forward(const StandardTableau& tableau);

// The staircase tableau T with eg_forward(T) == network. Reverses the slides
// for s_N, ..., s_1: for each step the vacated box is the unique corner of the
// zero region whose outward slide (pulling in the smaller of the entries
// below and to the right) ends at (n - s_t, s_t).
StandardTableau eg_inverse(const SortingNetwork& network);

// Every sorting network of size n, via eg_forward over all staircase
// tableaux; sorted. Limited by the enumeration cap (n <= 5 by default).
std::vector<SortingNetwork> all_networks(int n, int cap = kDefaultEnumerationCap);

}  // namespace sortnet
