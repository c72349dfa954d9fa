#include "metra/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace metra {

nlohmann::ordered_json point_to_json(const Point& p) {
  if (p.is_index()) return nlohmann::ordered_json(p.index());
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < p.dim(); ++i) arr.push_back(p[i]);
  return arr;
}

Point point_from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return Point::at_index(j.get<std::size_t>());
  if (!j.is_array()) throw std::invalid_argument("point must be an array or index");
  std::vector<double> c;
  c.reserve(j.size());
  for (const auto& v : j) c.push_back(v.get<double>());
  return Point(std::move(c));
}

nlohmann::ordered_json points_to_json(const PointList& pts, bool multiset) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Point& p : pts) arr.push_back(point_to_json(p));
  if (!multiset) return arr;
  nlohmann::ordered_json j;
  j["multiset"] = true;
  j["points"] = std::move(arr);
  return j;
}

PointList points_from_json(const nlohmann::json& j) {
  const nlohmann::json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("points"))
      throw std::invalid_argument("point set object needs a \"points\" field");
    arr = &j.at("points");
  }
  PointList out;
  out.reserve(arr->size());
  for (const auto& v : *arr) out.push_back(point_from_json(v));
  return out;
}

nlohmann::ordered_json body_to_json(const ConvexBody& b) {
  nlohmann::ordered_json j;
  switch (b.kind) {
    case ConvexBody::Kind::Hull:
      j["kind"] = "hull";
      j["vertices"] = points_to_json(b.vertices);
      break;
    case ConvexBody::Kind::MetricBall:
      j["kind"] = "ball";
      j["center"] = point_to_json(b.center);
      j["radius"] = b.radius;
      break;
    case ConvexBody::Kind::Segment:
      j["kind"] = "segment";
      j["endpoints"] = points_to_json({b.a, b.b});
      break;
  }
  return j;
}

ConvexBody body_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "hull") return ConvexBody::hull(points_from_json(j.at("vertices")));
  if (kind == "ball")
    return ConvexBody::metric_ball(point_from_json(j.at("center")),
                                   j.at("radius").get<double>());
  if (kind == "segment") {
    const PointList e = points_from_json(j.at("endpoints"));
    if (e.size() != 2) throw std::invalid_argument("segment needs two endpoints");
    return ConvexBody::segment(e[0], e[1]);
  }
  throw std::invalid_argument("unknown body kind: " + kind);
}

nlohmann::ordered_json map_table_to_json(const MapTable& t) {
  nlohmann::ordered_json j;
  j["domain"] = points_to_json(t.domain);
  j["values"] = points_to_json(t.values);
  return j;
}

MapTable map_table_from_json(const nlohmann::json& j) {
  MapTable t;
  t.domain = points_from_json(j.at("domain"));
  t.values = points_from_json(j.at("values"));
  if (t.domain.size() != t.values.size())
    throw std::invalid_argument("map table is not total on its domain");
  return t;
}

std::vector<std::vector<double>> matrix_from_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

PointList points_from_csv(const std::string& text) {
  PointList out;
  for (auto& row : matrix_from_csv(text)) out.push_back(Point(std::move(row)));
  return out;
}

std::string points_to_csv(const PointList& pts) {
  std::ostringstream os;
  os.precision(17);
  for (const Point& p : pts) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (i) os << ',';
      os << p[i];
    }
    os << '\n';
  }
  return os.str();
}

Space space_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "euclidean") return Space::euclidean(std::stoul(rest));
  if (head == "klein") {
    double r = 1.0, k = 1.0;
    std::istringstream is(rest);
    std::string part;
    while (std::getline(is, part, ',')) {
      const auto eq = part.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = part.substr(0, eq);
      const double val = std::stod(part.substr(eq + 1));
      if (key == "r") r = val;
      if (key == "k") k = val;
    }
    return Space::klein_ball(r, k);
  }
  if (head == "finite") return Space::finite(matrix_from_csv(read_file(rest)));
  throw std::invalid_argument("unknown space spec: " + spec);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
}

}  // namespace metra
