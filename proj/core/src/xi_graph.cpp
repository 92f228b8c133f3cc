#include "polyspline/xi_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polyspline {

int XiGraph::degree(int face) const {
  int d = 0;
  for (const auto& e : edges)
    if (e.face_a == face || e.face_b == face) ++d;
  return d;
}

std::vector<ProjPoint> candidate_xi(const Complex& c) {
  std::set<LinForm> lines;
  for (int e : c.interior_edges()) lines.insert(c.edge(e).line);
  std::set<ProjPoint> pts;
  for (auto i = lines.begin(); i != lines.end(); ++i)
    for (auto j = std::next(i); j != lines.end(); ++j) pts.insert(i->meet(*j));
  return {pts.begin(), pts.end()};
}

XiGraph build_xi_graph(const Complex& c, const ProjPoint& xi) {
  XiGraph g{xi, {}, {}};
  std::set<int> faces;
  for (int e : c.interior_edges()) {
    const EdgeRec& er = c.edge(e);
    if (!er.line.contains(xi)) continue;
    g.edges.push_back({er.face_a, er.face_b, e, er.line});
    faces.insert(er.face_a);
    faces.insert(er.face_b);
  }
  g.faces.assign(faces.begin(), faces.end());
  for (int f : g.faces) {
    if (g.degree(f) > 2)
      // impossible for a strictly convex cell (at most two of its facet
      // lines pass through any one point); something invalid got through
      throw std::logic_error("xi-graph vertex of degree > 2 at face " + std::to_string(f) +
                             ", xi = " + xi.str());
  }
  return g;
}

XiComponents classify_components(const XiGraph& g) {
  XiComponents out;
  std::map<int, std::vector<std::pair<int, int>>> adj; // face -> (other face, edge index in g)
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    const auto& e = g.edges[i];
    adj[e.face_a].push_back({e.face_b, i});
    adj[e.face_b].push_back({e.face_a, i});
  }

  std::set<int> seen;
  for (int f0 : g.faces) {
    if (seen.count(f0)) continue;
    // collect the component
    std::vector<int> comp{f0};
    seen.insert(f0);
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (auto [w, ei] : adj[comp[i]])
        if (!seen.count(w)) {
          seen.insert(w);
          comp.push_back(w);
        }
    const bool is_cycle =
        std::all_of(comp.begin(), comp.end(), [&](int f) { return adj[f].size() == 2; });
    if (!is_cycle) {
      // order the path from one endpoint
      int start = comp[0];
      for (int f : comp)
        if (adj[f].size() <= 1) {
          start = f;
          break;
        }
      std::vector<int> path{start};
      std::set<int> used{start};
      while (true) {
        bool advanced = false;
        for (auto [w, ei] : adj[path.back()])
          if (!used.count(w)) {
            path.push_back(w);
            used.insert(w);
            advanced = true;
            break;
          }
        if (!advanced) break;
      }
      out.segments.push_back(std::move(path));
      continue;
    }
    // walk the cycle from its smallest face
    const int start = *std::min_element(comp.begin(), comp.end());
    CycleData cd{g.xi, {}, 0, 0};
    std::set<int> used_edges;
    int cur = start;
    while (true) {
      int next_edge = -1;
      for (auto [w, ei] : adj[cur])
        if (!used_edges.count(ei)) {
          next_edge = ei;
          cur = w;
          break;
        }
      if (next_edge < 0) break;
      used_edges.insert(next_edge);
      cd.edge_ids.push_back(g.edges[next_edge].complex_edge);
    }
    cd.length = static_cast<int>(cd.edge_ids.size());
    std::set<LinForm> lines;
    for (int i : used_edges) lines.insert(g.edges[i].line);
    cd.distinct_lines = static_cast<int>(lines.size());
    if (cd.distinct_lines < 2)
      throw std::logic_error("cycle with fewer than two distinct lines at xi = " + g.xi.str());
    out.cycles.push_back(std::move(cd));
  }
  return out;
}

std::map<ProjPoint, std::vector<CycleData>> all_cycles(const Complex& c) {
  std::map<ProjPoint, std::vector<CycleData>> out;
  for (const ProjPoint& xi : candidate_xi(c)) {
    XiComponents comps = classify_components(build_xi_graph(c, xi));
    if (!comps.cycles.empty()) out.emplace(xi, std::move(comps.cycles));
  }
  return out;
}

} // namespace polyspline
