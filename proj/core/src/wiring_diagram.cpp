#include "sortnet/wiring_diagram.hpp"

#include <fmt/format.h>

#include "sortnet/error.hpp"

namespace sortnet {

std::vector<std::vector<int>> wire_trajectories(const SortingNetwork& network) {
  const int n = network.n();
  const int total = network.length();
  std::vector<std::vector<int>> paths(n, std::vector<int>(total + 1));
  std::vector<int> wire_at(n);  // wire_at[p-1] = wire currently at position p
  for (int w = 1; w <= n; ++w) {
    wire_at[w - 1] = w;
    paths[w - 1][0] = w;
  }
  for (int k = 1; k <= total; ++k) {
    const int s = network.at(k);
    std::swap(wire_at[s - 1], wire_at[s]);
    for (int p = 1; p <= n; ++p) {
      paths[wire_at[p - 1] - 1][k] = p;
    }
  }
  return paths;
}

std::string render_wiring_diagram(const SortingNetwork& network,
                                  const WiringStyle& style) {
  const int n = network.n();
  const int total = network.length();
  if (n < 2) {
    throw DomainError("nothing to render for a network of size < 2");
  }
  const double u = style.unit;
  const double m = style.margin;
  const double width = 2 * m + (total + 1) * u;
  const double height = 2 * m + n * u;
  // (time, height) in diagram units -> SVG pixels, y flipped
  auto px = [&](double t) { return m + t * u; };
  auto py = [&](double y) { return height - m - y * u; };

  std::string out;
  out += R"(<?xml version="1.0" encoding="UTF-8"?>)" "\n";
  out += fmt::format(
      R"(<svg xmlns="http://www.w3.org/2000/svg" width="{:g}" height="{:g}" viewBox="0 0 {:g} {:g}">)"
      "\n",
      width, height, width, height);
  out += fmt::format(
      R"(  <desc>sorting network n={} swaps={}</desc>)" "\n", n, total);
  out += R"(  <g fill="none" stroke-width="2" stroke-linejoin="round">)" "\n";

  const auto paths = wire_trajectories(network);
  for (int w = 1; w <= n; ++w) {
    const auto& path = paths[w - 1];
    std::string points = fmt::format("{:g},{:g}", px(0), py(path[0] - 0.5));
    for (int k = 1; k <= total; ++k) {
      if (path[k] == path[k - 1]) continue;
      points += fmt::format(" {:g},{:g} {:g},{:g}", px(k - 0.5),
                            py(path[k - 1] - 0.5), px(k + 0.5), py(path[k] - 0.5));
    }
    points += fmt::format(" {:g},{:g}", px(total + 1), py(path[total] - 0.5));
    const int hue = (360 * (w - 1)) / n;
    out += fmt::format(
        R"svg(    <polyline class="wire" data-wire="{}" stroke="hsl({},70%,40%)" points="{}"/>)svg"
        "\n",
        w, hue, points);
  }
  out += "  </g>\n";

  if (style.draw_crosses) {
    out += R"(  <g stroke="black" stroke-width="1">)" "\n";
    for (int k = 1; k <= total; ++k) {
      const double cx = px(k);
      const double cy = py(network.at(k));
      const double r = u / 8;
      out += fmt::format(
          R"(    <path class="cross" data-time="{}" data-position="{}" d="M{:g},{:g} L{:g},{:g} M{:g},{:g} L{:g},{:g}"/>)"
          "\n",
          k, network.at(k), cx - r, cy - r, cx + r, cy + r, cx - r, cy + r,
          cx + r, cy - r);
    }
    out += "  </g>\n";
  }

  if (style.draw_labels) {
    out += R"(  <g font-family="sans-serif" font-size="12">)" "\n";
    for (int w = 1; w <= n; ++w) {
      const int end = paths[w - 1][total];
      out += fmt::format(
          R"(    <text class="label-start" x="{:g}" y="{:g}" text-anchor="end">{}</text>)"
          "\n",
          px(0) - 6, py(w - 0.5) + 4, w);
      out += fmt::format(
          R"(    <text class="label-end" x="{:g}" y="{:g}">{}</text>)" "\n",
          px(total + 1) + 6, py(end - 0.5) + 4, w);
    }
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace sortnet
