#pragma once

#include <span>
#include <vector>

namespace sortnet {

// Sequence of N = n(n-1)/2 adjacent swaps whose composition
// sigma_{s_1} ... sigma_{s_N} is the reverse permutation.
class SortingNetwork {
 public:
  SortingNetwork() = default;
  // Throws DomainError if the sequence is not a sorting network of size n.
  SortingNetwork(int n, std::vector<int> swaps);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::vector<int>& swaps() const { return swaps_; }
  [[nodiscard]] int length() const { return static_cast<int>(swaps_.size()); }
  // s_k for 1-based time k.
  [[nodiscard]] int at(int time) const { return swaps_[time - 1]; }

  friend bool operator==(const SortingNetwork&, const SortingNetwork&) = default;
  friend auto operator<=>(const SortingNetwork&, const SortingNetwork&) = default;

 private:
  int n_ = 0;
  std::vector<int> swaps_;
};

inline long long network_length(int n) {
  return static_cast<long long>(n) * (n - 1) / 2;
}

// True iff length is C(n,2), all 0 < s_k < n, and the composition is the
// reverse permutation.
bool validate_network(std::span<const int> swaps, int n);

// One-line notation of sigma_{s_1} ... sigma_{s_k} on {1..n}. Entry p-1 is
// the label of the wire sitting at position p after the swaps.
std::vector<int> compose_swaps(std::span<const int> swaps, int n);

}  // namespace sortnet
