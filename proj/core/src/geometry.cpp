#include "sortnet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "sortnet/edelman_greene.hpp"
#include "sortnet/error.hpp"
#include "sortnet/parallel.hpp"

namespace sortnet {

PointConfiguration::PointConfiguration(std::vector<Point> points)
    : points_(std::move(points)) {
  std::stable_sort(points_.begin(), points_.end(),
                   [](const Point& a, const Point& b) { return a.x < b.x; });
}

PointConfiguration PointConfiguration::rotated(double angle) const {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  std::vector<Point> out;
  out.reserve(points_.size());
  for (const auto& p : points_) {
    out.push_back({p.x * c - p.y * s, p.x * s + p.y * c});
  }
  return PointConfiguration(std::move(out));
}

double vertical_angle(const Point& p, const Point& q) {
  // Rotating by phi maps dx to dx cos(phi) - dy sin(phi); zero when
  // tan(phi) = dx / dy.
  double phi = std::atan2(q.x - p.x, q.y - p.y);
  if (phi <= 0.0) phi += std::numbers::pi;
  return phi;
}

namespace {

struct PairAngle {
  double angle;
  int lower;
  int upper;
};

std::vector<PairAngle> pair_angles(const PointConfiguration& points) {
  std::vector<PairAngle> out;
  const int n = points.size();
  out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      out.push_back({vertical_angle(points.label(p), points.label(q)), p, q});
    }
  }
  std::sort(out.begin(), out.end(), [](const PairAngle& a, const PairAngle& b) {
    return a.angle < b.angle;
  });
  return out;
}

}  // namespace

GeneralPositionReport validate_general_position(const PointConfiguration& points,
                                                double eps) {
  GeneralPositionReport report;
  auto fail = [&](std::string message) {
    report.ok = false;
    report.violations.push_back(std::move(message));
  };
  const int n = points.size();
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      const Point& a = points.label(p);
      const Point& b = points.label(q);
      const double len = std::hypot(b.x - a.x, b.y - a.y);
      if (len == 0.0 || std::abs(b.x - a.x) < eps * len) {
        fail(fmt::format("points {} and {} share a vertical line", p, q));
      }
    }
  }
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      for (int r = q + 1; r <= n; ++r) {
        const Point& a = points.label(p);
        const Point& b = points.label(q);
        const Point& c = points.label(r);
        const double ux = b.x - a.x, uy = b.y - a.y;
        const double vx = c.x - a.x, vy = c.y - a.y;
        const double scale = std::hypot(ux, uy) * std::hypot(vx, vy);
        if (scale == 0.0 || std::abs(ux * vy - uy * vx) < eps * scale) {
          fail(fmt::format("points {}, {}, {} are collinear", p, q, r));
        }
      }
    }
  }
  const auto angles = pair_angles(points);
  for (std::size_t i = 0; i < angles.size(); ++i) {
    for (std::size_t k = i + 1;
         k < angles.size() && angles[k].angle - angles[i].angle < eps; ++k) {
      fail(fmt::format("lines {}-{} and {}-{} are parallel", angles[i].lower,
                       angles[i].upper, angles[k].lower, angles[k].upper));
    }
  }
  if (angles.size() >= 2 &&
      angles.front().angle + std::numbers::pi - angles.back().angle < eps) {
    fail(fmt::format("lines {}-{} and {}-{} are parallel", angles.front().lower,
                     angles.front().upper, angles.back().lower,
                     angles.back().upper));
  }
  return report;
}

std::vector<SwapEvent> rotation_sweep(const PointConfiguration& points,
                                      double eps) {
  const auto report = validate_general_position(points, eps);
  if (!report.ok) {
    throw DomainError("configuration not in general position: " +
                      report.violations.front());
  }
  const int n = points.size();
  std::vector<int> label_at(n);  // label_at[p-1] = label at position p
  std::vector<int> where(n + 1);
  std::iota(label_at.begin(), label_at.end(), 1);
  std::iota(where.begin(), where.end(), 0);
  std::vector<SwapEvent> events;
  for (const auto& pa : pair_angles(points)) {
    const int lo = std::min(where[pa.lower], where[pa.upper]);
    const int hi = std::max(where[pa.lower], where[pa.upper]);
    if (hi != lo + 1) {
      throw InternalError(fmt::format(
          "pair {}-{} swaps at non-adjacent positions {} and {}", pa.lower,
          pa.upper, lo, hi));
    }
    std::swap(label_at[lo - 1], label_at[hi - 1]);
    where[label_at[lo - 1]] = lo;
    where[label_at[hi - 1]] = hi;
    events.push_back({pa.angle, pa.lower, pa.upper, lo});
  }
  return events;
}

SortingNetwork realize_network(const PointConfiguration& points, double eps) {
  std::vector<int> swaps;
  for (const auto& e : rotation_sweep(points, eps)) swaps.push_back(e.position);
  return SortingNetwork(points.size(), std::move(swaps));
}

PointConfiguration sample_random_configuration(int n, SeededRng& rng, double eps,
                                               int max_attempts) {
  if (n < 2) {
    throw DomainError("configuration size must be at least 2");
  }
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Point> pts(n);
    for (auto& p : pts) {
      p.x = rng.uniform01();
      p.y = rng.uniform01();
    }
    PointConfiguration config(std::move(pts));
    if (validate_general_position(config, eps).ok) return config;
  }
  throw DomainError(fmt::format(
      "no configuration in general position after {} attempts (eps={:g})",
      max_attempts, eps));
}

std::optional<Window> certify_nonrealizable(const SortingNetwork& network,
                                            const SortingNetwork& gp,
                                            bool scan_wide) {
  if (gp.n() != 5) {
    throw DomainError("certificate pattern must be a size-5 network");
  }
  const int n = network.n();
  if (n < 5) return std::nullopt;
  const Pattern pattern(gp.swaps());
  const int len = pattern.length();
  for (int a = 1; a + 3 <= n - 1; ++a) {
    const int max_b = scan_wide ? n - 1 : a + 3;
    for (int b = a + 3; b <= max_b; ++b) {
      // Shortest prefix [1, t] holding all pattern swaps in [a, b].
      int matched = 0;
      bool broken = false;
      int t = 0;
      for (int k = 1; k <= network.length() && matched < len; ++k) {
        const int s = network.at(k);
        if (s == a - 1 || s == b + 1) {
          broken = true;
          break;
        }
        if (s < a || s > b) continue;
        if (s - a + 1 != pattern.swaps()[matched]) {
          broken = true;
          break;
        }
        ++matched;
        t = k;
      }
      if (!broken && matched == len) {
        return Window{1, t, a, b};
      }
    }
  }
  return std::nullopt;
}

GpCheckResult gp_check(const std::vector<int>& gp_swaps, long long draws,
                       std::uint64_t seed, int jobs) {
  GpCheckResult result;
  result.draws = draws;
  result.valid_network = validate_network(gp_swaps, 5);
  const auto networks = all_networks(5);
  result.total_networks = static_cast<int>(networks.size());

  // Each worker covers a block of draws with its own substream.
  constexpr long long kBlock = 1 << 14;
  const long long blocks = (draws + kBlock - 1) / kBlock;
  std::vector<std::vector<char>> seen(blocks,
                                      std::vector<char>(networks.size(), 0));
  parallel_for(static_cast<std::size_t>(blocks), jobs, [&](std::size_t block) {
    SeededRng rng(seed, block);
    const long long begin = static_cast<long long>(block) * kBlock;
    const long long end = std::min(draws, begin + kBlock);
    for (long long d = begin; d < end; ++d) {
      const auto net = realize_network(sample_random_configuration(5, rng));
      const auto it = std::lower_bound(networks.begin(), networks.end(), net);
      seen[block][it - networks.begin()] = 1;
    }
  });
  std::vector<char> any(networks.size(), 0);
  for (const auto& s : seen) {
    for (std::size_t i = 0; i < s.size(); ++i) any[i] |= s[i];
  }
  for (std::size_t i = 0; i < networks.size(); ++i) {
    if (any[i]) {
      ++result.realized_networks;
    } else {
      result.never_realized_set.push_back(networks[i]);
    }
  }
  result.never_realized =
      result.valid_network &&
      std::find_if(result.never_realized_set.begin(),
                   result.never_realized_set.end(), [&](const SortingNetwork& w) {
                     return w.swaps() == gp_swaps;
                   }) != result.never_realized_set.end();
  return result;
}

}  // namespace sortnet
