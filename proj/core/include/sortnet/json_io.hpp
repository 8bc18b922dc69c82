#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "sortnet/geometry.hpp"
#include "sortnet/network.hpp"
#include "sortnet/patterns.hpp"
#include "sortnet/tableau.hpp"
#include "sortnet/young_diagram.hpp"

// File formats:
//   diagram  {"rows":[3,2,1]}
//   tableau  {"shape":[3,2,1],"entries":[[1,2,4],[3,5],[6]]}
//   network  {"n":4,"swaps":[1,3,2,1,3,2]}
//   points   {"points":[[x1,y1],[x2,y2],...]}
//   window   {"time":[i,j],"position":[a,b]}
//
// Structurally malformed documents raise DataError; well-formed documents
// describing invalid objects raise DomainError.
namespace sortnet {

nlohmann::json to_json(const YoungDiagram& diagram);
nlohmann::json to_json(const StandardTableau& tableau);
nlohmann::json to_json(const SortingNetwork& network);
nlohmann::json to_json(const PointConfiguration& points);
nlohmann::json to_json(const Window& window);

YoungDiagram diagram_from_json(const nlohmann::json& j);
StandardTableau tableau_from_json(const nlohmann::json& j);
SortingNetwork network_from_json(const nlohmann::json& j);
PointConfiguration points_from_json(const nlohmann::json& j);
Window window_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace sortnet
