#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sortnet/network.hpp"
#include "sortnet/patterns.hpp"
#include "sortnet/rng.hpp"

namespace sortnet {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

// Planar points labeled 1..n by increasing x. The constructor sorts the
// input by x (stable); general position is checked separately.
class PointConfiguration {
 public:
  PointConfiguration() = default;
  explicit PointConfiguration(std::vector<Point> points);

  [[nodiscard]] const std::vector<Point>& points() const { return points_; }
  [[nodiscard]] int size() const { return static_cast<int>(points_.size()); }
  // Point with 1-based label.
  [[nodiscard]] const Point& label(int l) const { return points_[l - 1]; }

  // Configuration rotated counterclockwise about the origin by `angle`,
  // relabeled by the new x order.
  [[nodiscard]] PointConfiguration rotated(double angle) const;

 private:
  std::vector<Point> points_;
};

inline constexpr double kDefaultGeneralPositionEps = 1e-9;

struct GeneralPositionReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks that no pair is vertical, no triple is collinear (sine of the angle
// at the first point >= eps) and no two pairs are parallel (angle gap >= eps,
// mod pi). Every violation is listed.
GeneralPositionReport validate_general_position(const PointConfiguration& points,
                                                double eps = kDefaultGeneralPositionEps);

// Angle in (0, pi) by which the plane must rotate counterclockwise for the
// segment from p to q (p left of q) to become vertical.
double vertical_angle(const Point& p, const Point& q);

struct SwapEvent {
  double angle = 0.0;
  int lower_label = 0;  // labels of the two points, lower_label < upper_label
  int upper_label = 0;
  int position = 0;     // swap position in the network
};

// Rotation sweep over phi in (0, pi): pairs in order of vertical_angle, each
// swapping two adjacent entries of the running label order. Throws
// DomainError (naming the violation) outside general position and
// InternalError if a swapping pair is not adjacent.
std::vector<SwapEvent> rotation_sweep(const PointConfiguration& points,
                                      double eps = kDefaultGeneralPositionEps);

SortingNetwork realize_network(const PointConfiguration& points,
                               double eps = kDefaultGeneralPositionEps);

// i.i.d. uniform points in the unit square, redrawn until in general
// position. Throws DomainError after `max_attempts` failures.
PointConfiguration sample_random_configuration(int n, SeededRng& rng,
                                               double eps = kDefaultGeneralPositionEps,
                                               int max_attempts = 1000);

// Searches for an occurrence of the size-5 network `gp` at a time interval
// starting at 1 and a canonical position [a, a+3]; the witness certifies that
// `network` is not geometrically realizable. nullopt means inconclusive.
// With `scan_wide`, windows [a, b] with b > a+3 are also tried.
std::optional<Window> certify_nonrealizable(const SortingNetwork& network,
                                            const SortingNetwork& gp,
                                            bool scan_wide = false);

struct GpCheckResult {
  bool valid_network = false;   // gp is a sorting network of size 5
  bool never_realized = false;  // gp not produced by any sampled config
  long long draws = 0;
  int total_networks = 0;       // networks of size 5
  int realized_networks = 0;    // distinct networks seen
  std::vector<SortingNetwork> never_realized_set;
  [[nodiscard]] bool pass() const { return valid_network && never_realized; }
};

// Enumerates all size-5 networks, realizes `draws` random 5-point
// configurations and reports whether `gp` is in the never-realized set.
GpCheckResult gp_check(const std::vector<int>& gp_swaps, long long draws,
                       std::uint64_t seed, int jobs = 1);

}  // namespace sortnet
