#pragma once

// File formats.
//
// Polytope JSON:
//   {"name": "...", "dim": n, "facets": [[v, ...], ...], "coords": [["p/q", ...], ...]}
// "name" and "coords" are optional. Vertex indices are 0-based; the vertex count
// is one more than the largest index and every index must occur.
//
// VectorColoring JSON:
//   {"r": r, "colors": ["0110", ...]}   one bit string of length r per facet

#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include <json.hpp>

#include "facecode/error.hpp"
#include "facecode/polytope.hpp"
#include "facecode/rational.hpp"
#include "facecode/smallcover.hpp"

namespace facecode::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const SimplePolytope& p) {
  Json j;
  if (!p.name().empty()) j["name"] = p.name();
  j["dim"] = p.dim();
  j["facets"] = p.facets();
  if (p.has_coords()) {
    Json coords = Json::array();
    for (const auto& point : p.coords()) {
      Json row = Json::array();
      for (const auto& x : point) row.push_back(format_rational(x));
      coords.push_back(std::move(row));
    }
    j["coords"] = std::move(coords);
  }
  return j;
}

inline std::string write_polytope(const SimplePolytope& p) { return to_json(p).dump(2) + "\n"; }

inline RawPolytope raw_from_json(const Json& j) {
  try {
    require(j.is_object(), ErrorKind::InvalidInput, "polytope JSON must be an object");
    RawPolytope raw;
    require(j.contains("dim") && j.at("dim").is_number_integer(), ErrorKind::InvalidInput, "missing integer \"dim\"");
    raw.dim = j.at("dim").get<int>();
    require(j.contains("facets") && j.at("facets").is_array(), ErrorKind::InvalidInput, "missing array \"facets\"");
    for (const auto& f : j.at("facets")) {
      require(f.is_array(), ErrorKind::InvalidInput, "each facet must be an array of vertex indices");
      std::vector<int> facet;
      for (const auto& v : f) {
        require(v.is_number_integer(), ErrorKind::InvalidInput, "vertex indices must be integers");
        facet.push_back(v.get<int>());
      }
      raw.facets.push_back(std::move(facet));
    }
    if (j.contains("name")) {
      require(j.at("name").is_string(), ErrorKind::InvalidInput, "\"name\" must be a string");
      raw.name = j.at("name").get<std::string>();
    }
    if (j.contains("coords")) {
      require(j.at("coords").is_array(), ErrorKind::InvalidInput, "\"coords\" must be an array");
      std::vector<Point> coords;
      for (const auto& row : j.at("coords")) {
        require(row.is_array(), ErrorKind::InvalidInput, "each coordinate vector must be an array");
        Point p;
        for (const auto& x : row) {
          require(x.is_string(), ErrorKind::InvalidInput, "coordinates must be \"p/q\" strings");
          p.push_back(parse_rational(x.get<std::string>()));
        }
        coords.push_back(std::move(p));
      }
      raw.coords = std::move(coords);
    }
    return raw;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("polytope JSON: ") + e.what());
  }
}

/// Parses and validates. Polytopes read from files are marked Unverified.
inline SimplePolytope read_polytope(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::InvalidInput, std::string("polytope JSON: ") + e.what());
  }
  return validate(raw_from_json(j));
}

inline Json to_json(const VectorColoring& c) {
  Json j;
  j["r"] = c.r;
  Json colors = Json::array();
  for (const auto& v : c.colors) colors.push_back(v.to_string());
  j["colors"] = std::move(colors);
  return j;
}

inline VectorColoring read_coloring(std::string_view text) {
  try {
    const auto j = Json::parse(text);
    VectorColoring c;
    require(j.contains("r") && j.at("r").is_number_integer(), ErrorKind::InvalidInput, "missing integer \"r\"");
    c.r = j.at("r").get<int>();
    require(j.contains("colors") && j.at("colors").is_array(), ErrorKind::InvalidInput, "missing array \"colors\"");
    for (const auto& s : j.at("colors")) {
      require(s.is_string(), ErrorKind::InvalidInput, "colors must be bit strings");
      c.colors.push_back(BitVector::from_string(s.get<std::string>()));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("coloring JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::InvalidInput, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace facecode::io
