#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "metra/ball.hpp"
#include "metra/maps.hpp"
#include "metra/point.hpp"
#include "metra/space.hpp"

namespace metra {

// Point sets serialize as JSON arrays of coordinate arrays; multisets carry a
// {"multiset": true, "points": [...]} wrapper. Finite-space matrices load
// from headerless square CSV. Convex bodies use
// {"kind": "hull"|"ball"|"segment", ...}.

nlohmann::ordered_json point_to_json(const Point& p);
Point point_from_json(const nlohmann::json& j);

nlohmann::ordered_json points_to_json(const PointList& pts, bool multiset = false);
PointList points_from_json(const nlohmann::json& j);

nlohmann::ordered_json body_to_json(const ConvexBody& b);
ConvexBody body_from_json(const nlohmann::json& j);

nlohmann::ordered_json map_table_to_json(const MapTable& t);
MapTable map_table_from_json(const nlohmann::json& j);

std::vector<std::vector<double>> matrix_from_csv(const std::string& text);
PointList points_from_csv(const std::string& text);
std::string points_to_csv(const PointList& pts);

// "euclidean:<dim>", "klein:r=<r>,k=<k>", "finite:<csv path>"
Space space_from_spec(const std::string& spec);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace metra
