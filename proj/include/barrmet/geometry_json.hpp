#pragma once

#include <fstream>
#include <istream>
#include <string>

#include <json.hpp>

#include "barrmet/geometry.hpp"

namespace barrmet {

/// Parses {"outer": [[x,y],...], "holes": [[[x,y],...],...]} ("holes" may be
/// omitted).
inline PolygonWithHoles polygon_from_json(const nlohmann::json& j) {
  auto parse_ring = [](const nlohmann::json& jr) {
    Ring r;
    for (const auto& v : jr) {
      if (!v.is_array() || v.size() != 2)
        throw InvalidPolygon("polygon_from_json: vertex must be [x, y]");
      r.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
    return r;
  };
  if (!j.contains("outer")) throw InvalidPolygon("polygon_from_json: missing \"outer\"");
  Ring outer = parse_ring(j.at("outer"));
  std::vector<Ring> holes;
  if (j.contains("holes"))
    for (const auto& jh : j.at("holes")) holes.push_back(parse_ring(jh));
  return PolygonWithHoles(std::move(outer), std::move(holes));
}

inline PolygonWithHoles load_polygon(std::istream& in) {
  nlohmann::json j;
  in >> j;
  return polygon_from_json(j);
}

inline PolygonWithHoles load_polygon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_polygon: cannot open " + path);
  return load_polygon(in);
}

}  // namespace barrmet
