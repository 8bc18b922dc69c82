#include "sortnet/network.hpp"

#include <numeric>
#include <string>

#include "sortnet/error.hpp"

namespace sortnet {

SortingNetwork::SortingNetwork(int n, std::vector<int> swaps)
    : n_(n), swaps_(std::move(swaps)) {
  if (!validate_network(swaps_, n_)) {
    throw DomainError("not a sorting network of size " + std::to_string(n_));
  }
}

std::vector<int> compose_swaps(std::span<const int> swaps, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  for (int s : swaps) {
    if (s < 1 || s >= n) {
      throw DomainError("swap position " + std::to_string(s) +
                        " out of range for size " + std::to_string(n));
    }
    std::swap(perm[s - 1], perm[s]);
  }
  return perm;
}

bool validate_network(std::span<const int> swaps, int n) {
  if (n < 1 || static_cast<long long>(swaps.size()) != network_length(n)) {
    return false;
  }
  for (int s : swaps) {
    if (s < 1 || s >= n) return false;
  }
  const auto perm = compose_swaps(swaps, n);
  for (int p = 0; p < n; ++p) {
    if (perm[p] != n - p) return false;
  }
  return true;
}

}  // namespace sortnet
