#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "sortnet/error.hpp"
#include "sortnet/report.hpp"

namespace sortnet {
namespace {

ExperimentReport sample_report() {
  ExperimentReport r;
  r.experiment = "t1";
  r.params = {{"n", {50, 100}}, {"samples", 3}, {"seed", 1}, {"pattern", {1, 2}},
              {"prefix_c", 1.0}, {"counting", "greedy"}};
  PerNResult a{50, {1.0, 2.0, 4.0}, {{"mean_over_n2", 7.0 / 3 / 2500}}};
  PerNResult b{100, {0.1, 1.0 / 3, 1e-300}, {{"x", -0.0}, {"y", 123456789.123456789}}};
  r.per_n = {a, b};
  r.wall_clock_seconds = 1.25;
  return r;
}

TEST(PerNResult, Statistics) {
  const PerNResult r{5, {1, 2, 3, 4}, {}};
  EXPECT_DOUBLE_EQ(r.mean(), 2.5);
  EXPECT_DOUBLE_EQ(r.sd(), std::sqrt(5.0 / 3));
  EXPECT_DOUBLE_EQ(r.min(), 1);
  EXPECT_DOUBLE_EQ(r.max(), 4);
  const PerNResult one{5, {7}, {}};
  EXPECT_DOUBLE_EQ(one.sd(), 0.0);
}

TEST(ReportJson, Layout) {
  const auto j = report_to_json(sample_report());
  EXPECT_EQ(j["experiment"], "t1");
  EXPECT_EQ(j["per_n"][0]["n"], 50);
  EXPECT_DOUBLE_EQ(j["per_n"][0]["mean"].get<double>(), 7.0 / 3);
  EXPECT_TRUE(j["per_n"][0].contains("sd"));
  EXPECT_EQ(j["per_n"][0]["raw"].size(), 3u);
  EXPECT_FALSE(j.contains("wall_clock_s"));
  EXPECT_TRUE(report_to_json(sample_report(), true).contains("wall_clock_s"));
  EXPECT_EQ(j["version"], SORTNET_VERSION);
}

TEST(ReportJson, RoundTrip) {
  const auto r = sample_report();
  auto back = report_from_json(report_to_json(r, true));
  EXPECT_EQ(back, r);
  auto untimed = report_from_json(report_to_json(r));
  EXPECT_FALSE(untimed.wall_clock_seconds.has_value());
  // Text form round-trips too.
  EXPECT_EQ(report_from_json(nlohmann::json::parse(report_to_json(r, true).dump())), r);
}

TEST(ReportCsv, RoundTrip) {
  const auto r = sample_report();
  const auto csv = report_to_csv(r, true);
  EXPECT_EQ(csv.rfind("kind,n,key,index,value\n", 0), 0u);
  EXPECT_EQ(report_from_csv(csv), r);
  EXPECT_EQ(report_to_csv(report_from_csv(csv), true), csv);
  EXPECT_FALSE(report_from_csv(report_to_csv(r)).wall_clock_seconds.has_value());
}

TEST(ReportCsv, Malformed) {
  EXPECT_THROW(report_from_csv("nonsense\n"), DataError);
  EXPECT_THROW(report_from_csv("kind,n,key,index,value\nraw,x,,0,1\n"), DataError);
}

TEST(ReportJson, Malformed) {
  EXPECT_THROW(report_from_json(nlohmann::json::parse(R"({"experiment":1})")), DataError);
  EXPECT_THROW(report_from_json(nlohmann::json::array()), DataError);
}

}  // namespace
}  // namespace sortnet
