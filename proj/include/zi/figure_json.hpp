#pragma once

// Figure interchange format: {"vertices": [[x, y], ...]} with exact integers.
// Vertex order is preserved; duplicates and non-integers are rejected.

#include <fstream>
#include <string>

#include <json.hpp>

#include "zi/figures.hpp"

namespace zi {

inline nlohmann::json point_to_json(const LatticePoint& p) { return nlohmann::json::array({p.x, p.y}); }

inline nlohmann::json figure_to_json(const Figure& f) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& p : f.vertices) verts.push_back(point_to_json(p));
  return {{"vertices", verts}};
}

inline Figure figure_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_array())
    throw DomainError("figure JSON needs a \"vertices\" array");
  std::vector<LatticePoint> v;
  for (const auto& item : j.at("vertices")) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer())
      throw DomainError("each vertex must be a pair of integers, got " + item.dump());
    v.push_back({item[0].get<Int>(), item[1].get<Int>()});
  }
  return Figure(std::move(v));
}

inline Figure parse_figure(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed figure JSON: ") + e.what());
  }
  return figure_from_json(j);
}

inline Figure read_figure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open figure file " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_figure(text);
}

inline void write_figure_file(const std::string& path, const Figure& f) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write figure file " + path);
  out << figure_to_json(f).dump() << '\n';
}

}  // namespace zi
