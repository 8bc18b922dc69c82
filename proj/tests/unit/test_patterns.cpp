#include <gtest/gtest.h>

#include <algorithm>

#include "sortnet/edelman_greene.hpp"
#include "sortnet/error.hpp"
#include "sortnet/patterns.hpp"
#include "sortnet/sampler.hpp"

namespace sortnet {
namespace {

const SortingNetwork kFourColumnNetwork(5, {1, 3, 2, 4, 1, 3, 4, 2, 1, 3});
const SortingNetwork kPackingNetwork(5, {4, 2, 3, 1, 4, 2, 1, 3, 4, 2});

TEST(IsPattern, Examples) {
  EXPECT_TRUE(is_pattern(std::vector<int>{1, 2, 1}));
  EXPECT_TRUE(is_pattern(std::vector<int>{4, 2}));
  EXPECT_FALSE(is_pattern(std::vector<int>{1, 1}));
  EXPECT_FALSE(is_pattern(std::vector<int>{1, 2, 1, 2}));
  EXPECT_FALSE(is_pattern(std::vector<int>{0, 1}));
  EXPECT_FALSE(is_pattern(std::vector<int>{-2}));
  EXPECT_TRUE(is_pattern(std::vector<int>{}));
}

TEST(IsPattern, EveryNetworkPrefix) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& w : all_networks(n)) {
      for (int len = 0; len <= w.length(); ++len) {
        ASSERT_TRUE(is_pattern(std::span(w.swaps()).first(len)));
      }
    }
  }
}

TEST(Pattern, SizeAndValidation) {
  EXPECT_EQ(Pattern({1, 2, 1}).size(), 3);
  EXPECT_EQ(Pattern({4, 2}).size(), 5);
  EXPECT_THROW(Pattern({1, 1}), DomainError);
  EXPECT_THROW(Pattern(std::vector<int>{}), DomainError);
}

TEST(OccursAt, Examples) {
  EXPECT_TRUE(occurs_at(kFourColumnNetwork, Pattern({2, 1, 2}), {4, 7, 3, 4}));
  EXPECT_FALSE(occurs_at(kFourColumnNetwork, Pattern({2, 1, 2}), {4, 7, 2, 3}));
  for (const auto& w : all_networks(4)) {
    EXPECT_TRUE(occurs_at(w, Pattern(w.swaps()), {1, w.length(), 1, 3}));
  }
}

TEST(OccursAt, MalformedWindow) {
  const Pattern p({1});
  EXPECT_THROW(occurs_at(kFourColumnNetwork, p, {0, 3, 1, 1}), DomainError);
  EXPECT_THROW(occurs_at(kFourColumnNetwork, p, {4, 3, 1, 1}), DomainError);
  EXPECT_THROW(occurs_at(kFourColumnNetwork, p, {1, 11, 1, 1}), DomainError);
  EXPECT_THROW(occurs_at(kFourColumnNetwork, p, {1, 3, 2, 1}), DomainError);
  EXPECT_THROW(occurs_at(kFourColumnNetwork, p, {1, 3, 1, 5}), DomainError);
}

TEST(FindOccurrences, KnownInstances) {
  const auto four_col = find_occurrences(kFourColumnNetwork, Pattern({2, 1, 2}));
  EXPECT_NE(std::find(four_col.begin(), four_col.end(), Window{4, 7, 3, 4}), four_col.end());

  const auto packing = find_occurrences(kPackingNetwork, Pattern({1, 2}));
  const std::vector<Window> expected = {
      {2, 3, 2, 3}, {3, 5, 3, 4}, {4, 6, 1, 2}, {8, 9, 3, 4}};
  EXPECT_EQ(packing, expected);
  for (const auto& w : packing) EXPECT_TRUE(occurs_at(kPackingNetwork, Pattern({1, 2}), w));

  EXPECT_TRUE(find_occurrences(SortingNetwork(3, {1, 2, 1}), Pattern({1, 2, 1, 3})).empty());
}

TEST(FindOccurrences, OccurrencesBefore) {
  const auto occ = find_occurrences(kPackingNetwork, Pattern({1, 2}));
  EXPECT_EQ(occurrences_before(occ, 6).size(), 3u);
  EXPECT_EQ(occurrences_before(occ, 2).size(), 0u);
}

TEST(CountDisjoint, Examples) {
  const auto occ = find_occurrences(kPackingNetwork, Pattern({1, 2}));
  EXPECT_EQ(count_disjoint_exact(occ), 3);
  EXPECT_EQ(count_disjoint_greedy(occ), 3);
  EXPECT_EQ(count_disjoint_exact({{1, 2, 1, 1}}), 1);
  EXPECT_EQ(count_disjoint_exact({{1, 5, 1, 3}, {2, 3, 2, 2}}), 1);
  EXPECT_EQ(count_disjoint_exact({}), 0);
  EXPECT_EQ(count_disjoint_greedy({}), 0);
  // Overlap in time with disjoint positions is allowed.
  EXPECT_EQ(count_disjoint_exact({{1, 5, 1, 1}, {1, 5, 2, 2}}), 2);
}

TEST(CountDisjoint, ChosenFamilyIsDisjoint) {
  const auto occ = find_occurrences(kPackingNetwork, Pattern({1, 2}));
  for (const auto& set : {max_disjoint_exact(occ), max_disjoint_greedy(occ)}) {
    for (std::size_t x = 0; x < set.windows.size(); ++x) {
      for (std::size_t y = x + 1; y < set.windows.size(); ++y) {
        EXPECT_TRUE(disjoint(set.windows[x], set.windows[y]));
      }
    }
  }
}

TEST(CountDisjoint, CapExceeded) {
  std::vector<Window> many;
  for (int k = 1; k <= 65; ++k) many.push_back({k, k, 1, 1});
  EXPECT_THROW(count_disjoint_exact(many), CapacityError);
  EXPECT_EQ(count_disjoint_greedy(many), 65);
}

TEST(CountDisjoint, GreedyNeverExceedsExact) {
  SeededRng rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Window> ws;
    const int count = 1 + static_cast<int>(rng.below(30));
    for (int k = 0; k < count; ++k) {
      const int i = 1 + static_cast<int>(rng.below(20));
      const int a = 1 + static_cast<int>(rng.below(8));
      ws.push_back({i, i + static_cast<int>(rng.below(6)), a, a + static_cast<int>(rng.below(3))});
    }
    EXPECT_LE(count_disjoint_greedy(ws), count_disjoint_exact(ws));
  }
  for (const auto& w : sample_network_batch(12, 20, 5)) {
    const auto occ = find_occurrences(w, Pattern({1, 2}));
    if (occ.size() <= kExactPackingCap) {
      EXPECT_LE(count_disjoint_greedy(occ), count_disjoint_exact(occ));
    }
  }
}

// (w + 1, 1, 2, ..., n) is a sorting network of size n + 1 containing w
// shifted up by one position.
SortingNetwork embed_shifted(const SortingNetwork& w) {
  std::vector<int> swaps;
  for (int s : w.swaps()) swaps.push_back(s + 1);
  for (int s = 1; s <= w.n(); ++s) swaps.push_back(s);
  return SortingNetwork(w.n() + 1, std::move(swaps));
}

TEST(OccursAt, ShiftConsistency) {
  const std::vector<Pattern> patterns = {Pattern({1}), Pattern({1, 2}), Pattern({2, 1, 2}),
                                         Pattern({1, 3}), Pattern({2})};
  for (const auto& w : all_networks(5)) {
    const auto shifted = embed_shifted(w);
    for (const auto& p : patterns) {
      if (p.size() > w.n()) continue;
      for (int i = 1; i <= w.length(); ++i) {
        for (int j = i; j <= w.length(); ++j) {
          for (int a = 1; a <= w.n() - 1; ++a) {
            for (int b = a; b <= w.n() - 1; ++b) {
              ASSERT_EQ(occurs_at(w, p, {i, j, a, b}),
                        occurs_at(shifted, p, {i, j, a + 1, b + 1}));
            }
          }
        }
      }
      auto moved = find_occurrences(w, p);
      for (auto& win : moved) {
        ++win.pos_begin;
        ++win.pos_end;
      }
      const auto direct = find_occurrences(shifted, p);
      for (const auto& win : moved) {
        EXPECT_NE(std::find(direct.begin(), direct.end(), win), direct.end());
      }
    }
  }
}

// Independent reading of the occurrence definition, any window width.
bool occurs_brute(const SortingNetwork& w, const std::vector<int>& gamma, const Window& win) {
  std::vector<int> seen;
  for (int k = win.time_begin; k <= win.time_end; ++k) {
    const int s = w.at(k);
    if (s == win.pos_begin - 1 || s == win.pos_end + 1) return false;
    if (s >= win.pos_begin && s <= win.pos_end) seen.push_back(s - win.pos_begin + 1);
  }
  return seen == gamma;
}

int max_independent(const std::vector<Window>& ws, std::size_t from, std::vector<Window>& chosen) {
  if (from == ws.size()) return static_cast<int>(chosen.size());
  int best = max_independent(ws, from + 1, chosen);
  if (std::all_of(chosen.begin(), chosen.end(),
                  [&](const Window& c) { return disjoint(c, ws[from]); })) {
    chosen.push_back(ws[from]);
    best = std::max(best, max_independent(ws, from + 1, chosen));
    chosen.pop_back();
  }
  return best;
}

TEST(CountDisjoint, CanonicalWidthMatchesAllWidthsBruteForce) {
  const std::vector<std::vector<int>> patterns = {{1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}, {2, 1, 2}};
  for (int n = 3; n <= 5; ++n) {
    for (const auto& w : all_networks(n)) {
      for (const auto& gamma : patterns) {
        const Pattern p(gamma);
        if (p.size() > n) continue;
        std::vector<Window> all;
        for (int i = 1; i <= w.length(); ++i) {
          for (int j = i; j <= w.length(); ++j) {
            for (int a = 1; a < n; ++a) {
              for (int b = a; b < n; ++b) {
                if (occurs_brute(w, gamma, {i, j, a, b})) all.push_back({i, j, a, b});
              }
            }
          }
        }
        // A disjoint family stays disjoint when each window shrinks, so
        // only inclusion-minimal occurrences matter.
        std::vector<Window> minimal;
        for (const auto& x : all) {
          const bool has_smaller = std::any_of(all.begin(), all.end(), [&](const Window& y) {
            return y != x && x.contains(y);
          });
          if (!has_smaller) minimal.push_back(x);
        }
        std::vector<Window> chosen;
        const int brute = max_independent(minimal, 0, chosen);
        const auto occ = find_occurrences(w, p);
        ASSERT_EQ(count_disjoint_exact(occ), brute);
        for (const auto& win : occ) ASSERT_TRUE(occurs_brute(w, gamma, win));
      }
    }
  }
}

}  // namespace
}  // namespace sortnet
