#pragma once

#include <span>
#include <vector>

#include "sortnet/network.hpp"

namespace sortnet {

// True iff the sequence is a prefix of some reduced word for the reverse
// permutation: every swap acts on a not-yet-inverted adjacent pair. Entries
// below 1 give false.
bool is_pattern(std::span<const int> swaps);

// Nonempty reduced-word prefix. size() is one more than the largest swap.
class Pattern {
 public:
  Pattern() = default;
  // Throws DomainError unless is_pattern(swaps) and swaps is nonempty.
  explicit Pattern(std::vector<int> swaps);

  [[nodiscard]] const std::vector<int>& swaps() const { return swaps_; }
  [[nodiscard]] int length() const { return static_cast<int>(swaps_.size()); }
  [[nodiscard]] int size() const { return size_; }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<int> swaps_;
  int size_ = 0;
};

// Space-time rectangle [time_begin, time_end] x [pos_begin, pos_end],
// all bounds inclusive and 1-based.
struct Window {
  int time_begin = 1;
  int time_end = 1;
  int pos_begin = 1;
  int pos_end = 1;

  friend bool operator==(const Window&, const Window&) = default;
  friend auto operator<=>(const Window&, const Window&) = default;

  [[nodiscard]] bool contains(const Window& other) const {
    return time_begin <= other.time_begin && other.time_end <= time_end &&
           pos_begin <= other.pos_begin && other.pos_end <= pos_end;
  }
};

// Rectangles are disjoint when their time or their position intervals are.
inline bool disjoint(const Window& a, const Window& b) {
  return a.time_end < b.time_begin || b.time_end < a.time_begin ||
         a.pos_end < b.pos_begin || b.pos_end < a.pos_begin;
}

// The swaps of the network inside the window, shifted by pos_begin - 1, are
// exactly the pattern, and no swap in the time interval sits at pos_begin - 1
// or pos_end + 1. Throws DomainError for windows outside [1,N] x [1,n-1].
bool occurs_at(const SortingNetwork& network, const Pattern& pattern,
               const Window& window);

// All canonical-width occurrences (pos_end - pos_begin = size - 2). For each
// position and each start at a matching swap only the minimal end time is
// reported. Sorted by (time_begin, pos_begin).
std::vector<Window> find_occurrences(const SortingNetwork& network,
                                     const Pattern& pattern);

// Occurrences whose window ends by `time_limit`.
std::vector<Window> occurrences_before(const std::vector<Window>& occurrences,
                                       int time_limit);

struct OccurrenceSet {
  std::vector<Window> windows;  // pairwise disjoint
  int count() const { return static_cast<int>(windows.size()); }
};

inline constexpr std::size_t kExactPackingCap = 64;

// Maximum pairwise-disjoint subfamily by branch and bound. Throws
// CapacityError above `cap` windows (use the greedy count instead).
OccurrenceSet max_disjoint_exact(const std::vector<Window>& windows,
                                 std::size_t cap = kExactPackingCap);
int count_disjoint_exact(const std::vector<Window>& windows,
                         std::size_t cap = kExactPackingCap);

// Sweep in order of (time_end, pos_end), keeping every window disjoint from
// those already kept. A lower bound on the exact count.
OccurrenceSet max_disjoint_greedy(const std::vector<Window>& windows);
int count_disjoint_greedy(const std::vector<Window>& windows);

}  // namespace sortnet
