#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace krc {

struct GraphEdge {
  int src = 0;
  int label = 0;
  int dst = 0;
  auto operator<=>(const GraphEdge&) const = default;
};

// Finite labelled crystal graph.  Vertices are numbered in discovery order;
// the stored edges are the f-arrows, each implicitly paired with the e-arrow
// running backwards.
template <class Elem>
struct CrystalGraph {
  std::vector<Elem> vertices;
  std::vector<GraphEdge> edges;
  std::vector<int> index_set;
  std::map<Elem, int> position;

  int size() const { return static_cast<int>(vertices.size()); }

  void rebuild_index() {
    position.clear();
    for (int v = 0; v < size(); ++v) position.emplace(vertices[v], v);
  }

  std::optional<int> find(const Elem& x) const {
    auto it = position.find(x);
    if (it == position.end()) return std::nullopt;
    return it->second;
  }
};

// Closure of the seeds under all f_l and e_l.  Level-synchronized search:
// every frontier is sorted before numbering, so the vertex order depends only
// on the seed set.
template <class M>
CrystalGraph<typename M::Element> build_graph(const M& model,
                                              std::vector<typename M::Element> seeds) {
  using Elem = typename M::Element;
  CrystalGraph<Elem> g;
  g.index_set = model.index_set();

  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  std::vector<Elem> frontier = std::move(seeds);
  while (!frontier.empty()) {
    for (const Elem& x : frontier) {
      g.position.emplace(x, g.size());
      g.vertices.push_back(x);
    }
    std::vector<Elem> next;
    for (const Elem& x : frontier) {
      for (int l : g.index_set) {
        for (auto& img : {model.f(x, l), model.e(x, l)}) {
          if (!img) continue;
          if (g.position.count(*img)) continue;
          next.push_back(*img);
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }

  for (int v = 0; v < g.size(); ++v) {
    for (int l : g.index_set) {
      auto img = model.f(g.vertices[v], l);
      if (!img) continue;
      auto target = g.find(*img);
      if (!target) throw std::logic_error("build_graph: f image escaped the closure");
      g.edges.push_back({v, l, *target});
    }
  }
  return g;
}

}  // namespace krc
