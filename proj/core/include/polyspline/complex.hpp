#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyspline/linform.hpp"
#include "polyspline/rational.hpp"

namespace polyspline {

struct Vec2 {
  Rational x, y;
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

/// One edge of the complex, derived from consecutive face-vertex pairs.
/// Every edge has one or two incident faces; face_b < 0 marks a boundary
/// edge. face_a < face_b when both are present.
struct EdgeRec {
  int v0 = 0, v1 = 0; // v0 < v1
  int face_a = -1, face_b = -1;
  LinForm line;
  bool interior() const { return face_b >= 0; }
};

/// A validated planar polyhedral complex: strictly convex CCW faces glued
/// edge-to-edge, hereditary, with a connected dual graph. Immutable after
/// construction; all accessors are safe for concurrent use.
class Complex {
public:
  struct Data {
    std::string name;
    std::vector<Vec2> vertices;
    std::vector<std::vector<int>> faces; // CCW vertex-index cycles
  };

  /// Validates and derives edges/adjacency. Throws ValidationError with a
  /// message naming the violated invariant.
  static Complex build(Data data);

  const std::string& name() const { return name_; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const Vec2& vertex(int v) const { return vertices_[v]; }
  bool vertex_is_boundary(int v) const { return vertex_boundary_[v]; }

  int face_count() const { return static_cast<int>(faces_.size()); }
  const std::vector<int>& face(int f) const { return faces_[f]; }

  int edge_count() const { return static_cast<int>(edges_.size()); }
  const EdgeRec& edge(int e) const { return edges_[e]; }
  /// Interior edge indices in increasing order.
  const std::vector<int>& interior_edges() const { return interior_edges_; }
  /// Edge indices incident to vertex v, in increasing order.
  const std::vector<int>& edges_at_vertex(int v) const { return vertex_edges_[v]; }
  /// Edge indices bounding face f, one per consecutive vertex pair.
  const std::vector<int>& face_edges(int f) const { return face_edges_[f]; }

  /// Non-fatal diagnostics (e.g. Euler characteristic != 1).
  const std::vector<std::string>& warnings() const { return warnings_; }

private:
  Complex() = default;

  std::string name_;
  std::vector<Vec2> vertices_;
  std::vector<std::vector<int>> faces_;
  std::vector<EdgeRec> edges_;
  std::vector<int> interior_edges_;
  std::vector<std::vector<int>> vertex_edges_;
  std::vector<std::vector<int>> face_edges_;
  std::vector<bool> vertex_boundary_;
  std::vector<std::string> warnings_;
};

/// Parses the JSON input document (keys "name", "vertices", "faces"; see
/// README for the exact schema) and validates it as a Complex.
Complex parse_complex(std::string_view text);

/// Canonical linear form vanishing on the span of edge e.
const LinForm& edge_form(const Complex& c, int e);

struct FaceCounts {
  std::int64_t faces = 0;             // f_2
  std::int64_t interior_edges = 0;    // f^0_1
  std::int64_t interior_vertices = 0; // f^0_0
  std::int64_t boundary_edges = 0;
  std::int64_t boundary_vertices = 0;
};
FaceCounts face_counts(const Complex& c);

/// Dual graph: one vertex per 2-face, one edge per interior edge.
struct DualGraph {
  int face_count = 0;
  struct Edge {
    int face_a, face_b;
    int complex_edge;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adjacency; // face -> adjacent faces
  bool connected() const;
};
DualGraph dual_graph(const Complex& c);

/// A sub-complex given by index sets into the parent complex.
struct Star {
  std::vector<int> vertices;
  std::vector<int> edges;
  std::vector<int> faces;
};
Star star_of_vertex(const Complex& c, int v);
Star star_of_edge(const Complex& c, int e);
Star star_of_face(const Complex& c, int f);

bool is_simplicial(const Complex& c);

/// Number of distinct edge-line slopes at interior vertex v (counted as
/// distinct canonical forms). Throws on a boundary vertex.
int vertex_slope_count(const Complex& c, int v);

} // namespace polyspline
