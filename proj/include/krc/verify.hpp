#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "krc/graph.hpp"
#include "krc/weight.hpp"

namespace krc {

struct Violation {
  std::string check;
  int vertex = -1;
  std::vector<int> labels;
  std::string detail;
};

struct Report {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string check, int vertex, std::vector<int> labels, std::string detail) {
    violations.push_back({std::move(check), vertex, std::move(labels), std::move(detail)});
  }
  bool has(const std::string& check) const;
  std::string to_string() const;
};

// Per-vertex arrow tables of a labelled graph; fmap[v][l] / emap[v][l] hold
// the forward / backward neighbour or -1.
struct EdgeMaps {
  std::vector<std::map<int, int>> fmap;
  std::vector<std::map<int, int>> emap;
  std::vector<std::string> conflicts;  // non-deterministic arrows

  int fwd(int v, int l) const;
  int bwd(int v, int l) const;
  // arrow-chain lengths; -1 when a walk fails to terminate
  Int f_string(int v, int l) const;
  Int e_string(int v, int l) const;
};

EdgeMaps make_edge_maps(int vertex_count, const std::vector<GraphEdge>& edges);

// Vertices without any incoming f-arrow (the classical highest weights of a
// semiregular graph).
std::vector<int> source_vertices(int vertex_count, const std::vector<GraphEdge>& edges);

// Undirected connectivity over all labels.
bool is_connected(int vertex_count, const std::vector<GraphEdge>& edges);

// Local conditions characterising the crystal graphs of representations of a
// simply-laced algebra, checked at every vertex and every ordered label pair.
// String statistics are derived from the arrows themselves, so the checker
// applies to bare graphs.
Report verify_stembridge(int vertex_count, const std::vector<GraphEdge>& edges,
                         const std::vector<int>& index_set);

template <class Elem>
Report verify_stembridge(const CrystalGraph<Elem>& g) {
  return verify_stembridge(g.size(), g.edges, g.index_set);
}

// Unique label-respecting matching of two rooted graphs grown along the
// f-arrows; ok means total and bijective.
struct MatchResult {
  bool ok = false;
  std::vector<int> map;  // a-vertex -> b-vertex, -1 where unmatched
  std::vector<std::string> mismatches;
};

MatchResult rooted_match(int a_count, const std::vector<GraphEdge>& a_edges, int a_root,
                         int b_count, const std::vector<GraphEdge>& b_edges, int b_root,
                         const std::vector<int>& labels);

struct AxiomOptions {
  bool check_connectivity = true;
  bool check_semiregular = true;
};

// Checks the defining crystal properties at every vertex and label: the
// phi/eps pairing identity, weight steps along arrows, string-count steps,
// the f/e inverse pairing, operator determinism, agreement of the stored
// arrows with the model operators, string lengths (semiregularity) and
// connectivity.  Violations are report content, never errors.
template <class M>
Report verify_axioms(const CrystalGraph<typename M::Element>& g, const M& model,
                     const AxiomOptions& opts = {}) {
  Report rep;
  const auto maps = make_edge_maps(g.size(), g.edges);
  for (const auto& c : maps.conflicts) rep.add("operator-determinism", -1, {}, c);

  for (int v = 0; v < g.size(); ++v) {
    const auto& x = g.vertices[v];
    const Weight w = model.weight(x);
    if (!w.views_consistent())
      rep.add("weight-views", v, {}, "omega and content views disagree");
    for (int l : g.index_set) {
      const Int ph = model.phi(x, l);
      const Int ep = model.eps(x, l);
      if (ph < 0 || ep < 0) rep.add("nonnegative-string", v, {l}, "negative phi or eps");
      if (ph != ep + w.pairing(l))
        rep.add("phi-eps-pairing", v, {l},
                "phi = " + std::to_string(ph) + ", eps = " + std::to_string(ep) +
                    ", pairing = " + std::to_string(w.pairing(l)));

      const auto fx = model.f(x, l);
      const auto ex = model.e(x, l);
      const int ft = maps.fwd(v, l);
      const int es = maps.bwd(v, l);

      if ((ph == 0) == fx.has_value())
        rep.add("string-termination", v, {l}, "f defined iff phi > 0 fails");
      if ((ep == 0) == ex.has_value())
        rep.add("string-termination", v, {l}, "e defined iff eps > 0 fails");

      if (fx) {
        const auto target = g.find(*fx);
        if (!target) {
          rep.add("image-closure", v, {l}, "f image is not a graph vertex");
        } else {
          if (ft != *target) rep.add("inverse-pair", v, {l}, "stored f arrow disagrees with f");
          const Weight wf = model.weight(*fx);
          if (wf != minus_alpha(w, l)) rep.add("weight-step", v, {l}, "wt(f x) != wt(x) - alpha");
          if (model.eps(*fx, l) != ep + 1 || model.phi(*fx, l) != ph - 1)
            rep.add("string-step", v, {l}, "phi/eps do not step by one along f");
          const auto back = model.e(*fx, l);
          if (!back || !(*back == x))
            rep.add("inverse-pair", v, {l}, "e(f x) != x");
        }
      } else if (ft != -1) {
        rep.add("inverse-pair", v, {l}, "stored f arrow where f is undefined");
      }

      if (ex) {
        const auto origin = g.find(*ex);
        if (!origin) {
          rep.add("image-closure", v, {l}, "e image is not a graph vertex");
        } else {
          if (es != *origin) rep.add("inverse-pair", v, {l}, "stored arrows disagree with e");
          const Weight we = model.weight(*ex);
          if (we != plus_alpha(w, l)) rep.add("weight-step", v, {l}, "wt(e x) != wt(x) + alpha");
          if (model.eps(*ex, l) != ep - 1 || model.phi(*ex, l) != ph + 1)
            rep.add("string-step", v, {l}, "phi/eps do not step by one along e");
          const auto back = model.f(*ex, l);
          if (!back || !(*back == x))
            rep.add("inverse-pair", v, {l}, "f(e x) != x");
        }
      } else if (es != -1) {
        rep.add("inverse-pair", v, {l}, "incoming f arrow where e is undefined");
      }

      if (opts.check_semiregular) {
        if (maps.f_string(v, l) != ph)
          rep.add("semiregular-string", v, {l}, "f string length != phi");
        if (maps.e_string(v, l) != ep)
          rep.add("semiregular-string", v, {l}, "e string length != eps");
      }
    }
  }

  if (opts.check_connectivity && !is_connected(g.size(), g.edges))
    rep.add("connectivity", -1, {}, "graph is not connected");
  return rep;
}

template <class A, class B>
MatchResult rooted_match(const CrystalGraph<A>& ga, int root_a, const CrystalGraph<B>& gb,
                         int root_b) {
  return rooted_match(ga.size(), ga.edges, root_a, gb.size(), gb.edges, root_b, ga.index_set);
}

// The character as a formal sum: weight content -> multiplicity.
template <class M>
std::map<std::vector<Int>, Int> character(const CrystalGraph<typename M::Element>& g,
                                          const M& model) {
  std::map<std::vector<Int>, Int> mult;
  for (const auto& x : g.vertices) mult[model.weight(x).content] += 1;
  return mult;
}

}  // namespace krc
