#include "krc/verify.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace krc {

bool Report::has(const std::string& check) const {
  for (const auto& v : violations)
    if (v.check == check) return true;
  return false;
}

std::string Report::to_string() const {
  if (violations.empty()) return "OK\n";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.check;
    if (v.vertex >= 0) os << " at vertex " << v.vertex;
    if (!v.labels.empty()) {
      os << " labels";
      for (int l : v.labels) os << ' ' << l;
    }
    if (!v.detail.empty()) os << ": " << v.detail;
    os << '\n';
  }
  return os.str();
}

int EdgeMaps::fwd(int v, int l) const {
  auto it = fmap[v].find(l);
  return it == fmap[v].end() ? -1 : it->second;
}

int EdgeMaps::bwd(int v, int l) const {
  auto it = emap[v].find(l);
  return it == emap[v].end() ? -1 : it->second;
}

Int EdgeMaps::f_string(int v, int l) const {
  const Int bound = static_cast<Int>(fmap.size()) + 1;
  Int count = 0;
  for (int w = fwd(v, l); w != -1; w = fwd(w, l)) {
    if (++count > bound) return -1;
  }
  return count;
}

Int EdgeMaps::e_string(int v, int l) const {
  const Int bound = static_cast<Int>(emap.size()) + 1;
  Int count = 0;
  for (int w = bwd(v, l); w != -1; w = bwd(w, l)) {
    if (++count > bound) return -1;
  }
  return count;
}

EdgeMaps make_edge_maps(int vertex_count, const std::vector<GraphEdge>& edges) {
  EdgeMaps maps;
  maps.fmap.resize(vertex_count);
  maps.emap.resize(vertex_count);
  for (const auto& ed : edges) {
    if (!maps.fmap[ed.src].emplace(ed.label, ed.dst).second)
      maps.conflicts.push_back("two f arrows with label " + std::to_string(ed.label) +
                               " leave vertex " + std::to_string(ed.src));
    if (!maps.emap[ed.dst].emplace(ed.label, ed.src).second)
      maps.conflicts.push_back("two f arrows with label " + std::to_string(ed.label) +
                               " enter vertex " + std::to_string(ed.dst));
  }
  return maps;
}

std::vector<int> source_vertices(int vertex_count, const std::vector<GraphEdge>& edges) {
  std::vector<char> has_in(vertex_count, 0);
  for (const auto& ed : edges) has_in[ed.dst] = 1;
  std::vector<int> out;
  for (int v = 0; v < vertex_count; ++v)
    if (!has_in[v]) out.push_back(v);
  return out;
}

bool is_connected(int vertex_count, const std::vector<GraphEdge>& edges) {
  if (vertex_count == 0) return true;
  std::vector<std::vector<int>> adj(vertex_count);
  for (const auto& ed : edges) {
    adj[ed.src].push_back(ed.dst);
    adj[ed.dst].push_back(ed.src);
  }
  std::vector<char> seen(vertex_count, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == vertex_count;
}

namespace {

// Chained application; -1 once any step is missing.
int apply_chain(const EdgeMaps& maps, bool raise, int v, std::initializer_list<int> labels) {
  for (int l : labels) {
    if (v == -1) return -1;
    v = raise ? maps.bwd(v, l) : maps.fwd(v, l);
  }
  return v;
}

}  // namespace

Report verify_stembridge(int vertex_count, const std::vector<GraphEdge>& edges,
                         const std::vector<int>& index_set) {
  Report rep;
  const auto maps = make_edge_maps(vertex_count, edges);
  for (const auto& c : maps.conflicts) rep.add("operator-determinism", -1, {}, c);
  if (!rep.ok()) return rep;

  // string statistics straight from the arrows
  std::vector<std::map<int, Int>> eps(vertex_count), phi(vertex_count);
  for (int v = 0; v < vertex_count; ++v) {
    for (int l : index_set) {
      eps[v][l] = maps.e_string(v, l);
      phi[v][l] = maps.f_string(v, l);
      if (eps[v][l] < 0 || phi[v][l] < 0) {
        rep.add("operator-determinism", v, {l}, "arrow walk does not terminate");
        return rep;
      }
    }
  }

  for (int b = 0; b < vertex_count; ++b) {
    for (int l : index_set) {
      const int eb_l = maps.bwd(b, l);
      const int fb_l = maps.fwd(b, l);
      for (int j : index_set) {
        if (j == l) continue;

        if (eb_l != -1) {
          if (eps[eb_l][j] < eps[b][j] || phi[eb_l][j] > phi[b][j])
            rep.add("neighbor-monotonicity", b, {l, j},
                    "raising along l loosens the j string the wrong way");
        }

        const int eb_j = maps.bwd(b, j);
        if (eb_l != -1 && eb_j != -1) {
          // commuting square of raising operators
          if (eps[eb_l][j] == eps[b][j]) {
            const int p = apply_chain(maps, true, b, {l, j});
            const int q = apply_chain(maps, true, b, {j, l});
            if (p == -1 || q == -1 || p != q) {
              rep.add("e-commute", b, {l, j}, "raising operators fail to commute");
            } else {
              const int fjp = maps.fwd(p, j);
              if (fjp == -1 || phi[p][l] != phi[fjp][l])
                rep.add("e-commute", b, {l, j}, "phi_l changes across the square");
            }
          }
          // length-four braid relation
          if (eps[b][j] - eps[eb_l][j] == -1 && eps[b][l] - eps[eb_j][l] == -1) {
            const int p = apply_chain(maps, true, b, {l, j, j, l});
            const int q = apply_chain(maps, true, b, {j, l, l, j});
            if (p == -1 || q == -1 || p != q) {
              rep.add("e-braid", b, {l, j}, "raising braid fails");
            } else {
              const int fjp = maps.fwd(p, j);
              const int flp = maps.fwd(p, l);
              if (fjp == -1 || flp == -1 || phi[p][l] - phi[fjp][l] != -1 ||
                  phi[p][j] - phi[flp][j] != -1)
                rep.add("e-braid", b, {l, j}, "phi steps around the braid are off");
            }
          }
        }

        const int fb_j = maps.fwd(b, j);
        if (fb_l != -1 && fb_j != -1) {
          if (phi[fb_l][j] == phi[b][j]) {
            const int p = apply_chain(maps, false, b, {l, j});
            const int q = apply_chain(maps, false, b, {j, l});
            if (p == -1 || q == -1 || p != q) {
              rep.add("f-commute", b, {l, j}, "lowering operators fail to commute");
            } else {
              const int ejp = maps.bwd(p, j);
              if (ejp == -1 || eps[p][l] != eps[ejp][l])
                rep.add("f-commute", b, {l, j}, "eps_l changes across the square");
            }
          }
          if (phi[b][j] - phi[fb_l][j] == -1 && phi[b][l] - phi[fb_j][l] == -1) {
            const int p = apply_chain(maps, false, b, {l, j, j, l});
            const int q = apply_chain(maps, false, b, {j, l, l, j});
            if (p == -1 || q == -1 || p != q) {
              rep.add("f-braid", b, {l, j}, "lowering braid fails");
            } else {
              const int ejp = maps.bwd(p, j);
              const int elp = maps.bwd(p, l);
              if (ejp == -1 || elp == -1 || eps[p][l] - eps[ejp][l] != -1 ||
                  eps[p][j] - eps[elp][j] != -1)
                rep.add("f-braid", b, {l, j}, "eps steps around the braid are off");
            }
          }
        }
      }
    }
  }
  return rep;
}

MatchResult rooted_match(int a_count, const std::vector<GraphEdge>& a_edges, int a_root,
                         int b_count, const std::vector<GraphEdge>& b_edges, int b_root,
                         const std::vector<int>& labels) {
  MatchResult res;
  res.map.assign(a_count, -1);
  const auto ma = make_edge_maps(a_count, a_edges);
  const auto mb = make_edge_maps(b_count, b_edges);
  std::vector<int> back(b_count, -1);

  std::deque<std::pair<int, int>> queue{{a_root, b_root}};
  res.map[a_root] = b_root;
  back[b_root] = a_root;
  int matched = 1;

  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (int l : labels) {
      const int xs = ma.fwd(x, l);
      const int ys = mb.fwd(y, l);
      if ((xs == -1) != (ys == -1)) {
        res.mismatches.push_back("f_" + std::to_string(l) + " definedness differs at pair (" +
                                 std::to_string(x) + ", " + std::to_string(y) + ")");
        continue;
      }
      if (xs == -1) continue;
      if (res.map[xs] == -1 && back[ys] == -1) {
        res.map[xs] = ys;
        back[ys] = xs;
        ++matched;
        queue.emplace_back(xs, ys);
      } else if (res.map[xs] != ys) {
        res.mismatches.push_back("inconsistent images under f_" + std::to_string(l) +
                                 " at pair (" + std::to_string(x) + ", " + std::to_string(y) +
                                 ")");
      }
    }
  }

  if (matched != a_count || a_count != b_count)
    res.mismatches.push_back("matching is not total: " + std::to_string(matched) + " of " +
                             std::to_string(a_count) + " / " + std::to_string(b_count) +
                             " vertices");
  res.ok = res.mismatches.empty();
  return res;
}

}  // namespace krc
