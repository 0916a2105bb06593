#include "krc/io.hpp"

#include <algorithm>
#include <sstream>

namespace krc {

namespace {

using nlohmann::json;

json require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("pattern json: missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json pattern_to_json(const Pattern& pattern) {
  const auto& sh = pattern.shape();
  return json{{"n", sh.n}, {"m", sh.m}, {"i", sh.i}, {"rows", pattern.grid()}};
}

Pattern pattern_from_json(const json& j) {
  try {
    const CrystalShape shape(require(j, "n").get<int>(), require(j, "m").get<int>(),
                             require(j, "i").get<int>());
    const Grid grid = require(j, "rows").get<Grid>();
    return Pattern(shape, grid);
  } catch (const json::exception& err) {
    throw std::invalid_argument(std::string("pattern json: ") + err.what());
  }
}

std::string pattern_to_text(const Pattern& pattern) {
  std::ostringstream os;
  const auto& grid = pattern.grid();
  for (std::size_t r = 0; r < grid.size(); ++r) {
    if (r) os << '/';
    for (std::size_t c = 0; c < grid[r].size(); ++c) {
      if (c) os << ' ';
      os << grid[r][c];
    }
  }
  return os.str();
}

json graph_to_json(const CrystalGraph<Pattern>& graph) {
  json vertices = json::array();
  for (const auto& v : graph.vertices) vertices.push_back(pattern_to_json(v));
  auto edges = graph.edges;
  std::sort(edges.begin(), edges.end());
  json edge_list = json::array();
  for (const auto& ed : edges) edge_list.push_back({ed.src, ed.label, ed.dst});
  return json{{"vertices", vertices}, {"edges", edge_list}};
}

std::string graph_to_dot(const CrystalGraph<Pattern>& graph) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (int v = 0; v < graph.size(); ++v)
    os << "  v" << v << " [label=\"" << pattern_to_text(graph.vertices[v]) << "\"];\n";
  auto edges = graph.edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& ed : edges) {
    os << "  v" << ed.src << " -> v" << ed.dst << " [label=\"" << ed.label << '"';
    if (ed.label == 0) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

json tableau_to_json(const Tableau& tableau) { return json{{"rows", tableau.rows()}}; }

Tableau tableau_from_json(const json& j, const CrystalShape& shape) {
  try {
    return Tableau(shape, require(j, "rows").get<std::vector<std::vector<int>>>());
  } catch (const json::exception& err) {
    throw std::invalid_argument(std::string("tableau json: ") + err.what());
  }
}

}  // namespace krc
