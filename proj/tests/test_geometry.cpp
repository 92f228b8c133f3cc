#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "polyspline/complex.hpp"
#include "polyspline/error.hpp"

using namespace polyspline;
using namespace polyspline::testing;

namespace {

const char* kFixtures[] = {"square",
                           "two_triangles",
                           "vertex_star4",
                           "triangle_in_triangle",
                           "triangle_in_triangle_perturbed",
                           "two_squares",
                           "honeycomb"};

int find_edge(const Complex& c, int v0, int v1) {
  if (v0 > v1) std::swap(v0, v1);
  for (int e = 0; e < c.edge_count(); ++e)
    if (c.edge(e).v0 == v0 && c.edge(e).v1 == v1) return e;
  return -1;
}

} // namespace

TEST_CASE("single square") {
  const Complex c = load_fixture("square");
  const FaceCounts fc = face_counts(c);
  CHECK(fc.faces == 1);
  CHECK(fc.interior_edges == 0);
  CHECK(fc.interior_vertices == 0);
  CHECK(fc.boundary_edges == 4);
  CHECK(fc.boundary_vertices == 4);
  const DualGraph g = dual_graph(c);
  CHECK(g.face_count == 1);
  CHECK(g.edges.empty());
  CHECK(c.warnings().empty());
}

TEST_CASE("edge_form canonical values") {
  Complex::Data d;
  d.vertices = {{0, 0}, {1, 1}, {1, 0}};
  d.faces = {{0, 2, 1}};
  const Complex c = Complex::build(std::move(d));

  const int diag = find_edge(c, 0, 1);
  REQUIRE(diag >= 0);
  const LinForm f = edge_form(c, diag);
  CHECK(f.a() == 1);
  CHECK(f.b() == -1);
  CHECK(f.c() == 0);
  CHECK(f.str() == "x - y");

  const int vert = find_edge(c, 2, 1); // from (1,0) to (1,1)
  REQUIRE(vert >= 0);
  const LinForm g = edge_form(c, vert);
  CHECK(g.a() == 1);
  CHECK(g.b() == 0);
  CHECK(g.c() == -1);
  CHECK(g.str() == "x - z");

  // collinear edge (1,1)-(2,2) yields the same canonical triple as (0,0)-(1,1)
  const LinForm h = LinForm::through(1, 1, 2, 2);
  CHECK(h == f);
  // endpoint order does not matter
  CHECK(LinForm::through(1, 1, 0, 0) == f);
}

TEST_CASE("two-squares counts by direct enumeration") {
  const Complex c = load_fixture("two_squares");
  const FaceCounts fc = face_counts(c);
  CHECK(fc.faces == 8);
  CHECK(fc.interior_edges == 12);
  CHECK(fc.interior_vertices == 5);
  CHECK(fc.boundary_edges == 4);
  CHECK(fc.boundary_vertices == 4);
}

TEST_CASE("honeycomb counts") {
  const Complex c = load_fixture("honeycomb");
  const FaceCounts fc = face_counts(c);
  CHECK(fc.faces == 7);
  CHECK(fc.interior_edges == 12);
  CHECK(fc.interior_vertices == 6);
  CHECK(fc.boundary_edges == 18);
  CHECK(fc.boundary_vertices == 18);
}

TEST_CASE("triangle-in-triangle counts") {
  const Complex c = load_fixture("triangle_in_triangle");
  const FaceCounts fc = face_counts(c);
  CHECK(fc.faces == 4);
  CHECK(fc.interior_edges == 6);
  CHECK(fc.interior_vertices == 3);
}

TEST_CASE("dual graphs") {
  const Complex tit = load_fixture("triangle_in_triangle");
  DualGraph g = dual_graph(tit);
  CHECK(g.face_count == 4);
  CHECK(g.edges.size() == 6); // K4: center meets 3 quads, quads pairwise adjacent
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : g.edges) pairs.insert({std::min(e.face_a, e.face_b), std::max(e.face_a, e.face_b)});
  CHECK(pairs.size() == 6);
  CHECK(g.connected());

  const Complex hc = load_fixture("honeycomb");
  g = dual_graph(hc);
  CHECK(g.face_count == 7);
  CHECK(g.edges.size() == 12);
  // center face (index 0) adjacent to all six ring faces, ring is a 6-cycle
  CHECK(g.adjacency[0].size() == 6);
  for (int f = 1; f < 7; ++f) CHECK(g.adjacency[f].size() == 3);
}

TEST_CASE("stars") {
  const Complex ts = load_fixture("two_squares");
  // star of a 2-face: the face with its edges and vertices
  const Star sf = star_of_face(ts, 0);
  CHECK(sf.faces == std::vector<int>{0});
  CHECK(sf.edges.size() == 3);
  CHECK(sf.vertices.size() == 3);
  // star of the central vertex: the four triangles with all their faces
  const Star sv = star_of_vertex(ts, 0);
  CHECK(sv.faces == std::vector<int>{0, 1, 2, 3});
  CHECK(sv.edges.size() == 8); // four spokes + four inner-square edges
  CHECK(sv.vertices.size() == 5);
  // star of an interior edge: both incident faces
  const Complex tt = load_fixture("two_triangles");
  const int shared = tt.interior_edges().at(0);
  const Star se = star_of_edge(tt, shared);
  CHECK(se.faces.size() == 2);
}

TEST_CASE("simplicial flags and slope counts") {
  const Complex star4 = load_fixture("vertex_star4");
  CHECK(is_simplicial(star4));
  CHECK(vertex_slope_count(star4, 0) == 4); // forms y, x-y, x+y, x
  CHECK_THROWS_AS(vertex_slope_count(star4, 1), ValidationError);

  const Complex ts = load_fixture("two_squares");
  CHECK_FALSE(is_simplicial(ts));
  // inner corner (1,1) is vertex 1: lines y=x (twice), x=1, y=1
  CHECK(vertex_slope_count(ts, 1) == 3);

  const Complex hc = load_fixture("honeycomb");
  for (int v = 0; v < hc.vertex_count(); ++v)
    if (!hc.vertex_is_boundary(v)) CHECK(vertex_slope_count(hc, v) == 3);
}

TEST_CASE("euler consistency and no warnings on bundled fixtures") {
  for (const char* name : kFixtures) {
    CAPTURE(name);
    const Complex c = load_fixture(name);
    const long f0 = c.vertex_count(), f1 = c.edge_count(), f2 = c.face_count();
    CHECK(f0 - f1 + f2 == 1);
    CHECK(c.warnings().empty());
  }
}

TEST_CASE("parse errors name the violated invariant") {
  CHECK_THROWS_WITH_AS(parse_complex("not json"),
                       doctest::Contains("malformed document"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_complex(R"({"vertices": [[0,0]], "faces": []})"),
                       doctest::Contains("no faces"), ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_complex(R"({"vertices": [[0,0],[1,0],[0,1],[0,0]], "faces": [[0,1,2]]})"),
      doctest::Contains("duplicate vertices"), ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_complex(R"({"vertices": [[0,0],[1,0],[1,1],[0,1]], "faces": [[0,3,2,1]]})"),
      doctest::Contains("convex"), ValidationError);
  // reflex quad
  CHECK_THROWS_WITH_AS(
      parse_complex(
          R"({"vertices": [[0,0],[4,0],[1,1],[0,4]], "faces": [[0,1,2,3]]})"),
      doctest::Contains("convex"), ValidationError);
  // three consecutive collinear vertices
  CHECK_THROWS_WITH_AS(
      parse_complex(
          R"({"vertices": [[0,0],[1,0],[2,0],[2,1],[0,1]], "faces": [[0,1,2,3,4]]})"),
      doctest::Contains("collinear"), ValidationError);
  // coordinate form
  CHECK_THROWS_WITH_AS(
      parse_complex(R"({"vertices": [[0.5,0],[1,0],[1,1]], "faces": [[0,1,2]]})"),
      doctest::Contains("integer literal"), ValidationError);
}

TEST_CASE("edge with three faces is rejected") {
  // three triangles all sharing edge (0,1): the third face is geometrically
  // on top of the first, but incidence alone must already reject it
  const char* doc = R"({
    "vertices": [[0,0],[2,0],[1,1],[1,-1],[1,2]],
    "faces": [[0,1,2],[0,3,1],[0,1,4]]})";
  CHECK_THROWS_WITH_AS(parse_complex(doc), doctest::Contains("three or more faces"),
                       ValidationError);
}

TEST_CASE("T-junction is rejected") {
  const char* doc = R"({
    "vertices": [[0,0],[2,0],[2,2],[0,2],[2,1],[4,0],[4,1]],
    "faces": [[0,1,2,3],[1,5,6,4]]})";
  CHECK_THROWS_WITH_AS(parse_complex(doc), doctest::Contains("T-junction"), ValidationError);
}

TEST_CASE("overlapping faces are rejected") {
  // two unit squares sharing only a partial corner region
  const char* doc = R"({
    "vertices": [[0,0],[2,0],[2,2],[0,2],[1,1],[3,1],[3,3],[1,3]],
    "faces": [[0,1,2,3],[4,5,6,7]]})";
  CHECK_THROWS_AS(parse_complex(doc), ValidationError);

  // a triangle inscribed in the square, interiors overlapping: both faces
  // traverse the shared edge (0,1) in the same direction
  const char* inscribed = R"({
    "vertices": [[0,0],[1,0],[1,1],[0,1]],
    "faces": [[0,1,2,3],[0,1,2]]})";
  CHECK_THROWS_WITH_AS(parse_complex(inscribed), doctest::Contains("same direction"),
                       ValidationError);

  // same-side gluing with the apex outside the square
  const char* sameside = R"({
    "vertices": [[0,0],[1,0],[1,1],[0,1],["1/2",3]],
    "faces": [[0,1,2,3],[0,1,4]]})";
  CHECK_THROWS_WITH_AS(parse_complex(sameside), doctest::Contains("same direction"),
                       ValidationError);

  // duplicate face
  const char* dup = R"({
    "vertices": [[0,0],[1,0],[0,1]],
    "faces": [[0,1,2],[0,1,2]]})";
  CHECK_THROWS_AS(parse_complex(dup), ValidationError);
}

TEST_CASE("disconnected dual graph is rejected") {
  const char* doc = R"({
    "vertices": [[0,0],[1,0],[1,1],[0,1],[5,0],[6,0],[6,1],[5,1]],
    "faces": [[0,1,2,3],[4,5,6,7]]})";
  CHECK_THROWS_WITH_AS(parse_complex(doc), doctest::Contains("dual graph is disconnected"),
                       ValidationError);
}

TEST_CASE("hereditary violation: two triangles meeting at a vertex") {
  const char* doc = R"({
    "vertices": [[0,0],[1,1],[-1,1],[-1,-1],[1,-1]],
    "faces": [[0,1,2],[0,3,4]]})";
  CHECK_THROWS_WITH_AS(parse_complex(doc), doctest::Contains("hereditary"), ValidationError);
}

TEST_CASE("hereditary violation with connected dual graph") {
  // two-squares fixture minus the top and bottom triangles: the trapezoid
  // ring keeps the dual graph connected but the center vertex star is
  // pinched
  const char* doc = R"({
    "vertices": [[0,0],[1,1],[-1,1],[-1,-1],[1,-1],[2,2],[-2,2],[-2,-2],[2,-2]],
    "faces": [[0,2,3],[0,4,1],[1,5,6,2],[2,6,7,3],[3,7,8,4],[4,8,5,1]]})";
  CHECK_THROWS_WITH_AS(parse_complex(doc), doctest::Contains("hereditary"), ValidationError);
}

TEST_CASE("counts and slopes are affine invariant") {
  for (const char* name : {"two_squares", "honeycomb", "vertex_star4"}) {
    CAPTURE(name);
    const Complex c = load_fixture(name);
    const FaceCounts fc = face_counts(c);
    for (const AffineMap& map : random_affine_maps(7u, 3)) {
      const Complex mapped = apply_affine(c, map);
      const FaceCounts mc = face_counts(mapped);
      CHECK(mc.faces == fc.faces);
      CHECK(mc.interior_edges == fc.interior_edges);
      CHECK(mc.interior_vertices == fc.interior_vertices);
      CHECK(is_simplicial(mapped) == is_simplicial(c));
      for (int v = 0; v < c.vertex_count(); ++v)
        if (!c.vertex_is_boundary(v))
          CHECK(vertex_slope_count(mapped, v) == vertex_slope_count(c, v));
    }
  }
}

TEST_CASE("non-disk complex parses with a warning") {
  // square ring around a hole: hereditary, connected, but euler = 0
  const char* doc = R"({
    "vertices": [[0,0],[3,0],[3,3],[0,3],[1,1],[2,1],[2,2],[1,2]],
    "faces": [[0,1,5,4],[1,2,6,5],[2,3,7,6],[3,0,4,7]]})";
  const Complex c = parse_complex(doc);
  REQUIRE(c.warnings().size() == 1);
  CHECK(c.warnings()[0].find("Euler characteristic") != std::string::npos);
}
