#include "sortnet/patterns.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "sortnet/error.hpp"

namespace sortnet {

bool is_pattern(std::span<const int> swaps) {
  if (swaps.empty()) return true;
  const int largest = *std::max_element(swaps.begin(), swaps.end());
  if (*std::min_element(swaps.begin(), swaps.end()) < 1) return false;
  std::vector<int> perm(largest + 1);
  std::iota(perm.begin(), perm.end(), 1);
  for (int s : swaps) {
    if (perm[s - 1] > perm[s]) return false;  // pair already inverted
    std::swap(perm[s - 1], perm[s]);
  }
  return true;
}

Pattern::Pattern(std::vector<int> swaps) : swaps_(std::move(swaps)) {
  if (swaps_.empty() || !is_pattern(swaps_)) {
    throw DomainError("not a pattern (reduced-word prefix)");
  }
  size_ = *std::max_element(swaps_.begin(), swaps_.end()) + 1;
}

bool occurs_at(const SortingNetwork& network, const Pattern& pattern,
               const Window& w) {
  if (w.time_begin < 1 || w.time_begin > w.time_end ||
      w.time_end > network.length() || w.pos_begin < 1 ||
      w.pos_begin > w.pos_end || w.pos_end > network.n() - 1) {
    throw DomainError("window is malformed or outside the network");
  }
  const auto& gamma = pattern.swaps();
  std::size_t u = 0;
  for (int k = w.time_begin; k <= w.time_end; ++k) {
    const int s = network.at(k);
    if (s == w.pos_begin - 1 || s == w.pos_end + 1) return false;
    if (s < w.pos_begin || s > w.pos_end) continue;
    if (u == gamma.size() || gamma[u] != s - w.pos_begin + 1) return false;
    ++u;
  }
  return u == gamma.size();
}

std::vector<Window> find_occurrences(const SortingNetwork& network,
                                     const Pattern& pattern) {
  std::vector<Window> out;
  const int n = network.n();
  const int width = pattern.size() - 1;  // number of positions covered
  const auto& gamma = pattern.swaps();
  const int len = pattern.length();
  if (width > n - 1 || len > network.length()) return out;

  // Times of swaps per position, so each offset scans only nearby columns.
  std::vector<std::vector<int>> times(n + 1);
  for (int k = 1; k <= network.length(); ++k) {
    times[network.at(k)].push_back(k);
  }
  std::vector<int> local;  // times with swaps in [a-1, b+1], increasing
  for (int a = 1; a + width - 1 <= n - 1; ++a) {
    const int b = a + width - 1;
    local.clear();
    for (int p = std::max(1, a - 1); p <= std::min(n - 1, b + 1); ++p) {
      local.insert(local.end(), times[p].begin(), times[p].end());
    }
    std::sort(local.begin(), local.end());
    for (std::size_t start = 0; start + len <= local.size(); ++start) {
      bool match = true;
      for (int u = 0; u < len; ++u) {
        if (network.at(local[start + u]) != gamma[u] + a - 1) {
          match = false;
          break;
        }
      }
      if (match) {
        out.push_back({local[start], local[start + len - 1], a, b});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Window> occurrences_before(const std::vector<Window>& occurrences,
                                       int time_limit) {
  std::vector<Window> out;
  std::copy_if(occurrences.begin(), occurrences.end(), std::back_inserter(out),
               [&](const Window& w) { return w.time_end <= time_limit; });
  return out;
}

namespace {

using Mask = std::uint64_t;

class PackingSearch {
 public:
  explicit PackingSearch(const std::vector<Window>& windows)
      : count_(static_cast<int>(windows.size())), conflicts_(count_, 0) {
    for (int i = 0; i < count_; ++i) {
      for (int j = i + 1; j < count_; ++j) {
        if (!disjoint(windows[i], windows[j])) {
          conflicts_[i] |= Mask{1} << j;
          conflicts_[j] |= Mask{1} << i;
        }
      }
    }
  }

  Mask solve() {
    const Mask all = count_ == 64 ? ~Mask{0} : (Mask{1} << count_) - 1;
    branch(all, 0, 0);
    return best_;
  }

 private:
  // Greedy partition of the candidates into conflict cliques; any disjoint
  // subfamily takes at most one window per clique.
  int clique_cover(Mask candidates) const {
    int cliques = 0;
    while (candidates) {
      const int v = std::countr_zero(candidates);
      Mask clique_ok = conflicts_[v] & candidates;
      candidates &= ~(Mask{1} << v);
      while (clique_ok) {
        const int w = std::countr_zero(clique_ok);
        clique_ok &= conflicts_[w];
        candidates &= ~(Mask{1} << w);
      }
      ++cliques;
    }
    return cliques;
  }

  void branch(Mask candidates, Mask chosen, int size) {
    if (candidates == 0) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    if (size + clique_cover(candidates) <= best_size_) return;
    // Most constrained candidate first: it has the most conflicts left.
    int pick = -1;
    int most = -1;
    for (Mask rest = candidates; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int degree = std::popcount(conflicts_[v] & candidates);
      if (degree > most) {
        most = degree;
        pick = v;
      }
    }
    const Mask bit = Mask{1} << pick;
    branch(candidates & ~bit & ~conflicts_[pick], chosen | bit, size + 1);
    if (most > 0) {
      branch(candidates & ~bit, chosen, size);
    }
  }

  int count_;
  std::vector<Mask> conflicts_;
  Mask best_ = 0;
  int best_size_ = -1;
};

}  // namespace

OccurrenceSet max_disjoint_exact(const std::vector<Window>& windows,
                                 std::size_t cap) {
  if (windows.size() > std::min<std::size_t>(cap, 64)) {
    throw CapacityError("exact packing supports at most " +
                        std::to_string(std::min<std::size_t>(cap, 64)) +
                        " windows (got " + std::to_string(windows.size()) +
                        "); use the greedy count");
  }
  OccurrenceSet out;
  if (windows.empty()) return out;
  const Mask best = PackingSearch(windows).solve();
  for (std::size_t i = 0; i < windows.size(); ++i) {
    if (best & (Mask{1} << i)) out.windows.push_back(windows[i]);
  }
  return out;
}

int count_disjoint_exact(const std::vector<Window>& windows, std::size_t cap) {
  return max_disjoint_exact(windows, cap).count();
}

OccurrenceSet max_disjoint_greedy(const std::vector<Window>& windows) {
  std::vector<Window> order = windows;
  std::stable_sort(order.begin(), order.end(), [](const Window& a, const Window& b) {
    return std::tie(a.time_end, a.pos_end) < std::tie(b.time_end, b.pos_end);
  });
  int max_pos = 0;
  for (const auto& w : order) max_pos = std::max(max_pos, w.pos_end);
  // Accepted windows end no later than the current one, so a conflict exists
  // iff some accepted window over a shared column ends at or after its start.
  std::vector<int> last_end(max_pos + 1, 0);
  OccurrenceSet out;
  for (const auto& w : order) {
    bool free = true;
    for (int c = w.pos_begin; c <= w.pos_end && free; ++c) {
      free = last_end[c] < w.time_begin;
    }
    if (!free) continue;
    for (int c = w.pos_begin; c <= w.pos_end; ++c) last_end[c] = w.time_end;
    out.windows.push_back(w);
  }
  return out;
}

int count_disjoint_greedy(const std::vector<Window>& windows) {
  return max_disjoint_greedy(windows).count();
}

}  // namespace sortnet
