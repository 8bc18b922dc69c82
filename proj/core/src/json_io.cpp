#include "sortnet/json_io.hpp"

#include <fstream>
#include <sstream>

#include "sortnet/error.hpp"

namespace sortnet {

using nlohmann::json;

json to_json(const YoungDiagram& diagram) { return {{"rows", diagram.rows()}}; }

json to_json(const StandardTableau& tableau) {
  return {{"shape", tableau.shape().rows()}, {"entries", tableau.rows()}};
}

json to_json(const SortingNetwork& network) {
  return {{"n", network.n()}, {"swaps", network.swaps()}};
}

json to_json(const PointConfiguration& points) {
  json pts = json::array();
  for (const auto& p : points.points()) pts.push_back({p.x, p.y});
  return {{"points", pts}};
}

json to_json(const Window& w) {
  return {{"time", {w.time_begin, w.time_end}},
          {"position", {w.pos_begin, w.pos_end}}};
}

namespace {

// Runs `parse`, converting nlohmann type/key errors into DataError.
template <typename F>
auto structured(const char* what, F&& parse) {
  try {
    return parse();
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

YoungDiagram diagram_from_json(const json& j) {
  auto rows = structured("diagram", [&] { return j.at("rows").get<std::vector<int>>(); });
  return YoungDiagram(std::move(rows));
}

StandardTableau tableau_from_json(const json& j) {
  auto [shape, entries] = structured("tableau", [&] {
    return std::pair{j.at("shape").get<std::vector<int>>(),
                     j.at("entries").get<std::vector<std::vector<int>>>()};
  });
  if (shape.size() != entries.size()) {
    throw DomainError("tableau shape and entries disagree");
  }
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (static_cast<int>(entries[i].size()) != shape[i]) {
      throw DomainError("tableau shape and entries disagree in row " +
                        std::to_string(i + 1));
    }
  }
  return StandardTableau(std::move(entries));
}

SortingNetwork network_from_json(const json& j) {
  auto [n, swaps] = structured("network", [&] {
    return std::pair{j.at("n").get<int>(), j.at("swaps").get<std::vector<int>>()};
  });
  return SortingNetwork(n, std::move(swaps));
}

PointConfiguration points_from_json(const json& j) {
  auto raw = structured("points", [&] {
    return j.at("points").get<std::vector<std::vector<double>>>();
  });
  std::vector<Point> pts;
  pts.reserve(raw.size());
  for (const auto& p : raw) {
    if (p.size() != 2) throw DataError("each point must be an [x, y] pair");
    pts.push_back({p[0], p[1]});
  }
  return PointConfiguration(std::move(pts));
}

Window window_from_json(const json& j) {
  return structured("window", [&] {
    const auto t = j.at("time").get<std::vector<int>>();
    const auto p = j.at("position").get<std::vector<int>>();
    if (t.size() != 2 || p.size() != 2) {
      throw DataError("window intervals must be [begin, end] pairs");
    }
    return Window{t[0], t[1], p[0], p[1]};
  });
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open " + path.string());
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError("cannot parse " + path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw DataError("cannot write " + path.string());
  }
  out << text;
}

}  // namespace sortnet
