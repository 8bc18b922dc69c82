#include <gtest/gtest.h>

#include "sortnet/error.hpp"
#include "sortnet/young_diagram.hpp"
#include "test_support.hpp"

namespace sortnet {
namespace {

TEST(YoungDiagram, RejectsNonPartitions) {
  EXPECT_THROW(YoungDiagram({1, 2}), DomainError);
  EXPECT_THROW(YoungDiagram({2, 0, 1}), DomainError);
  EXPECT_THROW(YoungDiagram({-1}), DomainError);
  EXPECT_NO_THROW(YoungDiagram());
}

TEST(YoungDiagram, Staircase) {
  EXPECT_EQ(YoungDiagram::staircase(4).rows(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(YoungDiagram::staircase(1).size(), 0);
  EXPECT_EQ(YoungDiagram::staircase(5).size(), 10);
  EXPECT_EQ(YoungDiagram::staircase(5).staircase_size(), 5);
  EXPECT_FALSE(YoungDiagram({2, 2}).staircase_size().has_value());
}

TEST(YoungDiagram, TransposeIsInvolution) {
  for (int size = 0; size <= 8; ++size) {
    for (const auto& d : partitions(size)) {
      EXPECT_EQ(d.transpose().transpose(), d);
      EXPECT_EQ(d.transpose().size(), d.size());
    }
  }
  EXPECT_EQ(YoungDiagram({3, 1}).transpose().rows(), (std::vector<int>{2, 1, 1}));
}

TEST(YoungDiagram, PartitionCounts) {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int size = 0; size <= 8; ++size) {
    EXPECT_EQ(static_cast<int>(partitions(size).size()), expected[size]) << size;
  }
}

TEST(HookLength, Examples) {
  EXPECT_EQ(hook_length(YoungDiagram({3, 2, 1}), {1, 1}), 5);
  EXPECT_EQ(hook_length(YoungDiagram({1}), {1, 1}), 1);
  EXPECT_EQ(hook_length(YoungDiagram({3, 1}), {1, 1}), 4);
}

TEST(HookLength, OutsideDiagramThrows) {
  EXPECT_THROW(hook_length(YoungDiagram({3, 1}), {2, 2}), DomainError);
  EXPECT_THROW(hook_length(YoungDiagram(), {1, 1}), DomainError);
}

TEST(Corners, Examples) {
  EXPECT_EQ(corners(YoungDiagram({2, 1})), (std::vector<Box>{{1, 2}, {2, 1}}));
  EXPECT_EQ(corners(YoungDiagram({2, 2})), (std::vector<Box>{{2, 2}}));
  EXPECT_EQ(corners(YoungDiagram::staircase(4)),
            (std::vector<Box>{{1, 3}, {2, 2}, {3, 1}}));
  EXPECT_TRUE(corners(YoungDiagram()).empty());
}

TEST(Corners, HookLengthOneIffCorner) {
  for (int size = 1; size <= 8; ++size) {
    for (const auto& d : partitions(size)) {
      const auto cs = corners(d);
      for (const auto& b : d.boxes()) {
        const bool listed = std::find(cs.begin(), cs.end(), b) != cs.end();
        EXPECT_EQ(hook_length(d, b) == 1, listed);
        EXPECT_EQ(is_corner(d, b), listed);
      }
    }
  }
}

TEST(Cohook, Examples) {
  EXPECT_EQ(cohook(YoungDiagram({2, 1}), {2, 1}), (std::vector<Box>{{1, 1}}));
  EXPECT_EQ(cohook(YoungDiagram({3, 1}), {1, 3}), (std::vector<Box>{{1, 1}, {1, 2}}));
  EXPECT_TRUE(cohook(YoungDiagram({1}), {1, 1}).empty());
  EXPECT_THROW(cohook(YoungDiagram({1}), {1, 2}), DomainError);
}

TEST(Cohook, SizeIsRowPlusColumnOffset) {
  const YoungDiagram d({5, 5, 4, 3, 1});
  for (const auto& b : d.boxes()) {
    EXPECT_EQ(static_cast<int>(cohook(d, b).size()), b.row + b.col - 2);
  }
}

TEST(Subdiagram, Examples) {
  EXPECT_EQ(subdiagram(YoungDiagram({5, 5, 4, 3, 1}), {3, 2}).rows(),
            (std::vector<int>{3, 2}));
  EXPECT_EQ(subdiagram(YoungDiagram({3, 2, 1}), {1, 1}), YoungDiagram({3, 2, 1}));
  EXPECT_EQ(subdiagram(YoungDiagram({3, 2, 1}), {2, 2}), YoungDiagram({1}));
  EXPECT_THROW(subdiagram(YoungDiagram({3, 2, 1}), {3, 2}), DomainError);
}

TEST(RemoveCorner, RemovesOnlyCorners) {
  EXPECT_EQ(remove_corner(YoungDiagram({3, 1}), {1, 3}), YoungDiagram({2, 1}));
  EXPECT_EQ(remove_corner(YoungDiagram({3, 1}), {2, 1}), YoungDiagram({3}));
  EXPECT_THROW(remove_corner(YoungDiagram({3, 1}), {1, 2}), DomainError);
}

TEST(ParseShape, Formats) {
  EXPECT_EQ(parse_shape("staircase:4"), YoungDiagram::staircase(4));
  EXPECT_EQ(parse_shape("3,2,1"), YoungDiagram({3, 2, 1}));
  EXPECT_THROW(parse_shape("staircase:x"), DomainError);
  EXPECT_THROW(parse_shape("1,2"), DomainError);
  EXPECT_EQ(parse_shape(""), YoungDiagram());
}

TEST(RandomDiagrams, StayInsideStaircase) {
  SeededRng rng(5);
  for (int t = 0; t < 500; ++t) {
    const auto d = testing::random_diagram_in_staircase(40, rng);
    for (int i = 1; i <= d.num_rows(); ++i) EXPECT_LE(d.row_length(i), 40 - i);
  }
}

}  // namespace
}  // namespace sortnet
