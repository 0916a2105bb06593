#pragma once

#include <string>

#include "json.hpp"
#include "krc/graph.hpp"
#include "krc/pattern.hpp"
#include "krc/tableaux.hpp"

namespace krc {

// Interchange form: {"n":4,"m":5,"i":2,"rows":[[1,0],[2,1],[0,1]]} with the
// rows listed from q = i through q = n, each left to right.
nlohmann::json pattern_to_json(const Pattern& pattern);
Pattern pattern_from_json(const nlohmann::json& j);

// Rows joined by "/" with space-separated entries, e.g. "1 0/2 1/0 1".
std::string pattern_to_text(const Pattern& pattern);

// {"vertices":[pattern...],"edges":[[src,label,dst]...]}, vertices in graph
// order, edges sorted.
nlohmann::json graph_to_json(const CrystalGraph<Pattern>& graph);

// DOT digraph: node label as in pattern_to_text, edge label the operator
// index, 0-labelled arrows dashed.  Byte-stable for a fixed graph.
std::string graph_to_dot(const CrystalGraph<Pattern>& graph);

nlohmann::json tableau_to_json(const Tableau& tableau);
Tableau tableau_from_json(const nlohmann::json& j, const CrystalShape& shape);

}  // namespace krc
