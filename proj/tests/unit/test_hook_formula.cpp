#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "sortnet/error.hpp"
#include "sortnet/hook_formula.hpp"
#include "sortnet/tableau.hpp"
#include "test_support.hpp"

namespace sortnet {
namespace {

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension(YoungDiagram({2, 1})), 2);
  EXPECT_EQ(dimension(YoungDiagram({3, 2, 1})), 16);
  EXPECT_EQ(dimension(YoungDiagram({7})), 1);
  EXPECT_EQ(dimension(YoungDiagram()), 1);
  EXPECT_EQ(dimension(YoungDiagram::staircase(5)), 768);
}

TEST(Dimension, LargeStaircaseIsExact) {
  // 15 boxes: 15!/(1^5 3^4 5^3 7^2 9) = 292864.
  EXPECT_EQ(dimension(YoungDiagram::staircase(6)), 292864);
  EXPECT_GT(dimension(YoungDiagram::staircase(40)), BigInt(1) << 1000);
}

TEST(Dimension, MatchesEnumerationUpToEightBoxes) {
  for (int size = 0; size <= 8; ++size) {
    for (const auto& d : partitions(size)) {
      EXPECT_EQ(dimension(d), BigInt(enumerate_syt(d).size())) << to_string(d);
    }
  }
}

TEST(Dimension, TransposeInvariant) {
  for (int size = 0; size <= 10; ++size) {
    for (const auto& d : partitions(size)) {
      EXPECT_EQ(dimension(d), dimension(d.transpose()));
    }
  }
}

TEST(CornerLaw, Examples) {
  const auto a = corner_removal_distribution_exact(YoungDiagram({2, 1}));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0].probability, Rational(1, 2));
  EXPECT_EQ(a[1].probability, Rational(1, 2));

  const auto b = corner_removal_distribution_exact(YoungDiagram({2, 2}));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].corner, (Box{2, 2}));
  EXPECT_EQ(b[0].probability, 1);

  const auto c = corner_removal_distribution_exact(YoungDiagram({3, 1}));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].corner, (Box{1, 3}));
  EXPECT_EQ(c[0].probability, Rational(2, 3));
  EXPECT_EQ(c[1].probability, Rational(1, 3));

  EXPECT_THROW(corner_removal_distribution(YoungDiagram()), DomainError);
  EXPECT_THROW(corner_removal_distribution_exact(YoungDiagram()), DomainError);
}

TEST(CornerLaw, ExactlyMatchesEnumeration) {
  for (int size = 1; size <= 8; ++size) {
    for (const auto& d : partitions(size)) {
      std::map<Box, long long> at_max;
      long long total = 0;
      for_each_syt(d, [&](const StandardTableau& t) {
        ++at_max[t.positions()[size]];
        ++total;
      });
      Rational sum = 0;
      const auto exact = corner_removal_distribution_exact(d);
      const auto approx = corner_removal_distribution(d);
      ASSERT_EQ(exact.size(), approx.size());
      for (std::size_t k = 0; k < exact.size(); ++k) {
        const Rational freq(at_max[exact[k].corner], total);
        EXPECT_EQ(exact[k].probability, freq) << to_string(d);
        EXPECT_EQ(corner_probability_exact(d, exact[k].corner), freq);
        EXPECT_NEAR(approx[k].probability, freq.convert_to<double>(), 1e-12);
        sum += exact[k].probability;
      }
      EXPECT_EQ(sum, 1);
    }
  }
}

TEST(CornerLaw, FloatSumsToOne) {
  SeededRng rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto d = testing::random_diagram_in_staircase(60, rng);
    if (d.empty()) continue;
    double sum = 0;
    for (const auto& cp : corner_removal_distribution(d)) sum += cp.probability;
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(CornerRatio, Examples) {
  EXPECT_DOUBLE_EQ(corner_probability_ratio(YoungDiagram({2, 1}), {1, 2}, {2, 1}), 1.0);
  EXPECT_DOUBLE_EQ(corner_probability_ratio(YoungDiagram({3, 1}), {1, 3}, {2, 1}), 2.0);
  EXPECT_DOUBLE_EQ(corner_probability_ratio(YoungDiagram({2, 2}), {2, 2}, {2, 2}), 1.0);
  EXPECT_THROW(corner_probability_ratio(YoungDiagram({2, 2}), {1, 2}, {2, 2}), DomainError);
}

TEST(CornerRatio, Bound) {
  EXPECT_DOUBLE_EQ(corner_ratio_bound({1, 1}, {1, 1}), 1.0);
  EXPECT_DOUBLE_EQ(corner_ratio_bound({1, 3}, {2, 1}), 3.0 * 5.0);
  EXPECT_DOUBLE_EQ(corner_ratio_bound({4, 1}, {1, 2}), 4.0 * 7.0);
}

TEST(CornerRatio, NeverExceedsDistanceBound) {
  SeededRng rng(2024);
  int pairs = 0;
  for (int t = 0; t < 2000; ++t) {
    const auto d = testing::random_diagram_in_staircase(40, rng);
    if (d.empty()) continue;
    const auto law = corner_removal_distribution(d);
    for (const auto& x : law) {
      for (const auto& y : law) {
        const double ratio = x.probability / y.probability;
        EXPECT_LE(ratio, corner_ratio_bound(x.corner, y.corner) * (1 + 1e-12))
            << to_string(d);
        ++pairs;
      }
    }
  }
  EXPECT_GT(pairs, 2000);
}

// Corners near the anti-diagonal and away from the edges keep probability of
// order 1/n: the minimum of n * P(x) over random diagrams does not decay.
double min_scaled_probability(int n, int ell, SeededRng& rng) {
  double lowest = 1e300;
  for (int t = 0; t < 300; ++t) {
    const int i = n / 4 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n / 2 - ell)));
    const int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(ell)));
    const int j = n - i - d;
    if (j < n / 4) continue;
    std::vector<int> rows(static_cast<std::size_t>(i), 0);
    rows[i - 1] = j;
    for (int r = i - 1; r >= 1; --r) {
      const int lo = rows[r];
      const int hi = n - r;
      rows[r - 1] = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(hi - lo, 2) + 1)));
    }
    for (int r = i + 1, prev = j - 1; r < n && prev > 0; ++r) {
      const int len = std::max(0, std::min(prev, n - r) - static_cast<int>(rng.below(2)));
      if (len == 0) break;
      rows.push_back(len);
      prev = len;
    }
    const YoungDiagram lambda(rows);
    if (!is_corner(lambda, {i, j})) continue;
    for (const auto& cp : corner_removal_distribution(lambda)) {
      if (cp.corner == Box{i, j}) lowest = std::min(lowest, n * cp.probability);
    }
  }
  return lowest;
}

TEST(CornerLaw, AntiDiagonalCornersStayOrderOneOverN) {
  SeededRng rng(99);
  const double m20 = min_scaled_probability(20, 2, rng);
  const double m40 = min_scaled_probability(40, 2, rng);
  const double m80 = min_scaled_probability(80, 2, rng);
  ASSERT_LT(m80, 1e300);
  EXPECT_GT(m20, 0.0);
  // No decay towards zero: the minimum at n = 80 stays within a constant
  // factor of the minimum at n = 20.
  EXPECT_GT(m40, 0.5 * m20);
  EXPECT_GT(m80, 0.5 * m40);
}

}  // namespace
}  // namespace sortnet
