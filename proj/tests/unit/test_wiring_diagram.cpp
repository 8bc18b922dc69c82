#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include "sortnet/error.hpp"
#include "sortnet/sampler.hpp"
#include "sortnet/wiring_diagram.hpp"

namespace sortnet {
namespace {

struct Polyline {
  int wire = 0;
  std::vector<std::pair<double, double>> points;
};

std::vector<Polyline> parse_polylines(const std::string& svg) {
  static const std::regex re(R"re(<polyline class="wire" data-wire="(\d+)"[^>]*points="([^"]*)")re");
  std::vector<Polyline> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re);
       it != std::sregex_iterator(); ++it) {
    Polyline p;
    p.wire = std::stoi((*it)[1]);
    std::istringstream pts((*it)[2].str());
    std::string pair;
    while (pts >> pair) {
      const auto comma = pair.find(',');
      p.points.emplace_back(std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1)));
    }
    out.push_back(std::move(p));
  }
  return out;
}

int count_of(const std::string& text, const std::string& needle) {
  int c = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++c;
  return c;
}

TEST(WireTrajectories, EndpointsReversed) {
  const SortingNetwork w(4, {1, 3, 2, 1, 3, 2});
  const auto paths = wire_trajectories(w);
  ASSERT_EQ(paths.size(), 4u);
  for (int wire = 1; wire <= 4; ++wire) {
    EXPECT_EQ(paths[wire - 1].front(), wire);
    EXPECT_EQ(paths[wire - 1].back(), 5 - wire);
  }
  // After the first swap at position 1, wires 1 and 2 trade places.
  EXPECT_EQ(paths[0][1], 2);
  EXPECT_EQ(paths[1][1], 1);
}

TEST(Render, SizeFourNetwork) {
  WiringStyle style;
  const auto svg = render_wiring_diagram(SortingNetwork(4, {1, 3, 2, 1, 3, 2}), style);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  const auto lines = parse_polylines(svg);
  ASSERT_EQ(lines.size(), 4u);
  // y grows upward: position p is drawn at height p - 1/2 above the bottom margin.
  const double bottom = style.margin + 4 * style.unit;
  for (const auto& line : lines) {
    const double start_height = (bottom - line.points.front().second) / style.unit;
    const double end_height = (bottom - line.points.back().second) / style.unit;
    EXPECT_NEAR(start_height, line.wire - 0.5, 1e-9);
    EXPECT_NEAR(end_height, (5 - line.wire) - 0.5, 1e-9);
  }
  EXPECT_EQ(count_of(svg, R"(class="cross")"), 6);
  EXPECT_NE(svg.find(R"(data-time="3" data-position="2")"), std::string::npos);
  EXPECT_EQ(count_of(svg, R"(class="label-start")"), 4);
}

TEST(Render, SingleSwap) {
  const auto svg = render_wiring_diagram(SortingNetwork(2, {1}));
  const auto lines = parse_polylines(svg);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].points.front().second, lines[1].points.back().second);
  EXPECT_EQ(lines[0].points.back().second, lines[1].points.front().second);
}

TEST(Render, OptionalLayers) {
  WiringStyle style;
  style.draw_crosses = false;
  style.draw_labels = false;
  const auto svg = render_wiring_diagram(SortingNetwork(3, {1, 2, 1}), style);
  EXPECT_EQ(count_of(svg, "cross"), 0);
  EXPECT_EQ(count_of(svg, "label-"), 0);
}

TEST(Render, EveryPairCrossesOnce) {
  SeededRng rng(10);
  for (int trial = 0; trial < 5; ++trial) {
    const auto w = sample_random_network(10, rng);
    const auto lines = parse_polylines(render_wiring_diagram(w));
    ASSERT_EQ(lines.size(), 10u);
    const auto paths = wire_trajectories(w);
    for (int a = 0; a < 10; ++a) {
      for (int b = a + 1; b < 10; ++b) {
        int crossings = 0;
        for (int k = 1; k <= w.length(); ++k) {
          const bool before = paths[a][k - 1] < paths[b][k - 1];
          const bool after = paths[a][k] < paths[b][k];
          crossings += before != after;
        }
        EXPECT_EQ(crossings, 1);
      }
    }
  }
}

}  // namespace
}  // namespace sortnet
