#pragma once

#include <string>
#include <vector>

#include "sortnet/network.hpp"

namespace sortnet {

// Position (1-based, bottom to top) of every wire after each swap.
// Element [w-1][k] is the position of wire w after k swaps; wire w starts at
// position w.
std::vector<std::vector<int>> wire_trajectories(const SortingNetwork& network);

struct WiringStyle {
  double unit = 40.0;    // pixels per time step and per position
  double margin = 30.0;
  bool draw_crosses = true;
  bool draw_labels = true;
};

// SVG document with one <polyline> per wire. Wire positions p sit at height
// p - 1/2 so that the swap at time k crosses at grid point (k, s_k); the y
// axis increases upward.
std::string render_wiring_diagram(const SortingNetwork& network,
                                  const WiringStyle& style = {});

}  // namespace sortnet
