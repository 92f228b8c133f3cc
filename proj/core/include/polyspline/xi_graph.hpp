#pragma once

#include <map>
#include <vector>

#include "polyspline/complex.hpp"
#include "polyspline/linform.hpp"

namespace polyspline {

/// Refined dual graph for a codimension-2 point xi: vertices are the faces
/// with at least one interior edge whose span contains xi, joined whenever
/// they share such an edge. Every vertex has degree <= 2.
struct XiGraph {
  struct Edge {
    int face_a, face_b; // face_a < face_b
    int complex_edge;
    LinForm line;
  };
  ProjPoint xi;
  std::vector<int> faces; // sorted ascending
  std::vector<Edge> edges;

  int degree(int face) const;
};

/// One cycle component of a XiGraph together with its ideal data: n is the
/// number of distinct lines among the cycle's edges, i.e. the generator
/// count of the associated power ideal.
struct CycleData {
  ProjPoint xi;
  std::vector<int> edge_ids; // interior edges, in traversal order
  int distinct_lines = 0;    // n >= 2
  int length = 0;            // number of graph edges
};

struct XiComponents {
  std::vector<CycleData> cycles;
  std::vector<std::vector<int>> segments; // each a path's face list, in path order
};

/// All projective intersection points of pairs of distinct interior edge
/// lines, deduplicated; includes points at infinity from parallel pairs.
/// Empty when fewer than two distinct interior lines exist.
std::vector<ProjPoint> candidate_xi(const Complex& c);

XiGraph build_xi_graph(const Complex& c, const ProjPoint& xi);

XiComponents classify_components(const XiGraph& g);

/// Cycle inventory over all candidate xi; only xi carrying at least one
/// cycle appear, keyed in canonical order.
std::map<ProjPoint, std::vector<CycleData>> all_cycles(const Complex& c);

} // namespace polyspline
