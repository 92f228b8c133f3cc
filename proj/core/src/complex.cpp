#include "polyspline/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

#include "polyspline/error.hpp"

namespace polyspline {

namespace {

/// Sign of the cross product (q - p) x (r - p): >0 left turn, 0 collinear.
int orient(const Vec2& p, const Vec2& q, const Vec2& r) {
  const Rational v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return v.sign();
}

bool between_inclusive(const Rational& a, const Rational& b, const Rational& x) {
  return (a <= x && x <= b) || (b <= x && x <= a);
}

/// p strictly inside the open segment (a, b); assumes nothing.
bool strictly_inside_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
  if (orient(a, b, p) != 0) return false;
  if (p == a || p == b) return false;
  return between_inclusive(a.x, b.x, p.x) && between_inclusive(a.y, b.y, p.y);
}

std::string face_str(int f) { return "face " + std::to_string(f); }

} // namespace

Complex Complex::build(Data data) {
  Complex c;
  c.name_ = std::move(data.name);
  c.vertices_ = std::move(data.vertices);
  c.faces_ = std::move(data.faces);

  const int nv = static_cast<int>(c.vertices_.size());
  const int nf = static_cast<int>(c.faces_.size());
  if (nv == 0) throw ValidationError("complex has no vertices");
  if (nf == 0) throw ValidationError("complex has no faces");

  for (int f = 0; f < nf; ++f) {
    const auto& cy = c.faces_[f];
    if (cy.size() < 3) throw ValidationError(face_str(f) + " has fewer than 3 vertices");
    std::set<int> seen;
    for (int v : cy) {
      if (v < 0 || v >= nv)
        throw ValidationError(face_str(f) + " references vertex " + std::to_string(v) +
                              " out of range");
      if (!seen.insert(v).second)
        throw ValidationError(face_str(f) + " repeats vertex " + std::to_string(v));
    }
  }

  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      if (c.vertices_[i] == c.vertices_[j])
        throw ValidationError("duplicate vertices " + std::to_string(i) + " and " +
                              std::to_string(j));

  {
    std::vector<bool> used(nv, false);
    for (const auto& cy : c.faces_)
      for (int v : cy) used[v] = true;
    for (int v = 0; v < nv; ++v)
      if (!used[v])
        throw ValidationError("vertex " + std::to_string(v) + " is not used by any face");
  }

  // Every consecutive turn must be a strict left turn: convex, CCW, no
  // three consecutive collinear vertices. (Self-crossing cycles with all
  // left turns are caught by the pairwise edge checks below.)
  for (int f = 0; f < nf; ++f) {
    const auto& cy = c.faces_[f];
    const int m = static_cast<int>(cy.size());
    for (int i = 0; i < m; ++i) {
      const Vec2& a = c.vertices_[cy[i]];
      const Vec2& b = c.vertices_[cy[(i + 1) % m]];
      const Vec2& d = c.vertices_[cy[(i + 2) % m]];
      const int o = orient(a, b, d);
      if (o < 0)
        throw ValidationError(face_str(f) + " is not convex and counterclockwise");
      if (o == 0)
        throw ValidationError(face_str(f) + " has three consecutive collinear vertices");
    }
  }

  // Derive edges from consecutive face-vertex pairs.
  std::map<std::pair<int, int>, int> edge_ids;
  std::vector<bool> first_dir; // first incident face traverses v0 -> v1?
  c.face_edges_.assign(nf, {});
  for (int f = 0; f < nf; ++f) {
    const auto& cy = c.faces_[f];
    const int m = static_cast<int>(cy.size());
    for (int i = 0; i < m; ++i) {
      const int from = cy[i], to = cy[(i + 1) % m];
      int a = from, b = to;
      if (a > b) std::swap(a, b);
      auto [it, fresh] = edge_ids.try_emplace({a, b}, static_cast<int>(c.edges_.size()));
      if (fresh) {
        EdgeRec e{a, b, f, -1,
                  LinForm::through(c.vertices_[a].x, c.vertices_[a].y, c.vertices_[b].x,
                                   c.vertices_[b].y)};
        c.edges_.push_back(std::move(e));
        first_dir.push_back(from == a);
      } else {
        EdgeRec& e = c.edges_[it->second];
        if (e.face_b >= 0)
          throw ValidationError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                ") is incident to three or more faces");
        // CCW faces with disjoint interiors traverse a shared edge in
        // opposite directions
        if (first_dir[it->second] == (from == a))
          throw ValidationError("faces " + std::to_string(e.face_a) + " and " +
                                std::to_string(f) + " overlap: edge (" + std::to_string(a) +
                                ", " + std::to_string(b) +
                                ") is traversed twice in the same direction");
        e.face_b = f;
        if (e.face_a > e.face_b) std::swap(e.face_a, e.face_b);
      }
      c.face_edges_[f].push_back(it->second);
    }
  }

  // Faces may intersect only in shared full edges or shared vertices.
  const int ne = static_cast<int>(c.edges_.size());
  for (int e = 0; e < ne; ++e) {
    const Vec2& a = c.vertices_[c.edges_[e].v0];
    const Vec2& b = c.vertices_[c.edges_[e].v1];
    for (int v = 0; v < nv; ++v)
      if (strictly_inside_segment(a, b, c.vertices_[v]))
        throw ValidationError("T-junction: vertex " + std::to_string(v) +
                              " lies in the interior of edge (" +
                              std::to_string(c.edges_[e].v0) + ", " +
                              std::to_string(c.edges_[e].v1) + ")");
  }
  for (int e1 = 0; e1 < ne; ++e1) {
    const Vec2& p1 = c.vertices_[c.edges_[e1].v0];
    const Vec2& p2 = c.vertices_[c.edges_[e1].v1];
    for (int e2 = e1 + 1; e2 < ne; ++e2) {
      const Vec2& q1 = c.vertices_[c.edges_[e2].v0];
      const Vec2& q2 = c.vertices_[c.edges_[e2].v1];
      const int o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
      const int o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
      if (o1 * o2 < 0 && o3 * o4 < 0)
        throw ValidationError("edges (" + std::to_string(c.edges_[e1].v0) + ", " +
                              std::to_string(c.edges_[e1].v1) + ") and (" +
                              std::to_string(c.edges_[e2].v0) + ", " +
                              std::to_string(c.edges_[e2].v1) + ") cross");
      if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        // collinear: sharing more than an endpoint means partial overlap
        // (vertex-in-interior cases were caught above; equal endpoints give
        // the same derived edge)
        const bool share_endpoint = (c.edges_[e1].v0 == c.edges_[e2].v0) ||
                                    (c.edges_[e1].v0 == c.edges_[e2].v1) ||
                                    (c.edges_[e1].v1 == c.edges_[e2].v0) ||
                                    (c.edges_[e1].v1 == c.edges_[e2].v1);
        const bool x_overlap = between_inclusive(p1.x, p2.x, q1.x) ||
                               between_inclusive(p1.x, p2.x, q2.x) ||
                               between_inclusive(q1.x, q2.x, p1.x);
        const bool y_overlap = between_inclusive(p1.y, p2.y, q1.y) ||
                               between_inclusive(p1.y, p2.y, q2.y) ||
                               between_inclusive(q1.y, q2.y, p1.y);
        if (!share_endpoint && x_overlap && y_overlap)
          throw ValidationError("collinear edges (" + std::to_string(c.edges_[e1].v0) + ", " +
                                std::to_string(c.edges_[e1].v1) + ") and (" +
                                std::to_string(c.edges_[e2].v0) + ", " +
                                std::to_string(c.edges_[e2].v1) + ") overlap");
      }
    }
  }
  for (int f = 0; f < nf; ++f) {
    const auto& cy = c.faces_[f];
    const int m = static_cast<int>(cy.size());
    for (int v = 0; v < nv; ++v) {
      bool inside = true;
      for (int i = 0; i < m && inside; ++i)
        inside = orient(c.vertices_[cy[i]], c.vertices_[cy[(i + 1) % m]], c.vertices_[v]) > 0;
      if (inside)
        throw ValidationError("vertex " + std::to_string(v) + " lies inside " + face_str(f));
    }
  }

  for (int e = 0; e < ne; ++e)
    if (c.edges_[e].interior()) c.interior_edges_.push_back(e);

  c.vertex_edges_.assign(nv, {});
  for (int e = 0; e < ne; ++e) {
    c.vertex_edges_[c.edges_[e].v0].push_back(e);
    c.vertex_edges_[c.edges_[e].v1].push_back(e);
  }
  c.vertex_boundary_.assign(nv, false);
  for (int e = 0; e < ne; ++e)
    if (!c.edges_[e].interior()) {
      c.vertex_boundary_[c.edges_[e].v0] = true;
      c.vertex_boundary_[c.edges_[e].v1] = true;
    }

  // Hereditary: the dual graph of every star is connected. Only vertex
  // stars can fail (edge and face stars are trivially connected).
  {
    std::vector<std::vector<int>> vertex_faces(nv);
    for (int f = 0; f < nf; ++f)
      for (int v : c.faces_[f]) vertex_faces[v].push_back(f);
    for (int v = 0; v < nv; ++v) {
      const auto& fs = vertex_faces[v];
      if (fs.size() <= 1) continue;
      std::map<int, int> pos;
      for (int i = 0; i < static_cast<int>(fs.size()); ++i) pos[fs[i]] = i;
      // any edge shared by two star faces lies in the star, so it joins them
      std::vector<std::vector<int>> adj(fs.size());
      for (int e = 0; e < ne; ++e) {
        const EdgeRec& er = c.edges_[e];
        if (!er.interior()) continue;
        auto ia = pos.find(er.face_a), ib = pos.find(er.face_b);
        if (ia != pos.end() && ib != pos.end()) {
          adj[ia->second].push_back(ib->second);
          adj[ib->second].push_back(ia->second);
        }
      }
      std::vector<bool> seen(fs.size(), false);
      std::queue<int> q;
      q.push(0);
      seen[0] = true;
      int reached = 1;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u])
          if (!seen[w]) {
            seen[w] = true;
            ++reached;
            q.push(w);
          }
      }
      if (reached != static_cast<int>(fs.size()))
        throw ValidationError("hereditary violation: the dual graph of the star of vertex " +
                              std::to_string(v) + " is disconnected");
    }
  }

  {
    DualGraph g = dual_graph(c);
    if (!g.connected()) throw ValidationError("dual graph is disconnected");
  }

  const long euler = static_cast<long>(nv) - ne + nf;
  if (euler != 1) {
    std::ostringstream os;
    os << "Euler characteristic f0 - f1 + f2 = " << euler
       << " != 1; dimension formulas are not guaranteed for non-disk complexes";
    c.warnings_.push_back(os.str());
  }

  return c;
}

namespace {

Rational coord_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ValidationError("coordinate must be an integer literal or a \"p/q\" string");
}

} // namespace

Complex parse_complex(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("malformed document: top level must be an object");

  Complex::Data data;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ValidationError("\"name\" must be a string");
    data.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ValidationError("missing \"vertices\" list");
  if (!doc.contains("faces") || !doc["faces"].is_array())
    throw ValidationError("missing \"faces\" list");

  for (const auto& v : doc["vertices"]) {
    if (!v.is_array() || v.size() != 2)
      throw ValidationError("each vertex must be a 2-element list");
    data.vertices.push_back({coord_from_json(v[0]), coord_from_json(v[1])});
  }
  for (const auto& f : doc["faces"]) {
    if (!f.is_array()) throw ValidationError("each face must be a list of vertex indices");
    std::vector<int> cy;
    for (const auto& v : f) {
      if (!v.is_number_integer()) throw ValidationError("face vertex indices must be integers");
      cy.push_back(v.get<int>());
    }
    data.faces.push_back(std::move(cy));
  }
  return Complex::build(std::move(data));
}

const LinForm& edge_form(const Complex& c, int e) { return c.edge(e).line; }

FaceCounts face_counts(const Complex& c) {
  FaceCounts fc;
  fc.faces = c.face_count();
  fc.interior_edges = static_cast<std::int64_t>(c.interior_edges().size());
  fc.boundary_edges = c.edge_count() - fc.interior_edges;
  for (int v = 0; v < c.vertex_count(); ++v)
    (c.vertex_is_boundary(v) ? fc.boundary_vertices : fc.interior_vertices) += 1;
  return fc;
}

bool DualGraph::connected() const {
  if (face_count == 0) return true;
  std::vector<bool> seen(face_count, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adjacency[u])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        q.push(w);
      }
  }
  return reached == face_count;
}

DualGraph dual_graph(const Complex& c) {
  DualGraph g;
  g.face_count = c.face_count();
  g.adjacency.assign(g.face_count, {});
  for (int e : c.interior_edges()) {
    const EdgeRec& er = c.edge(e);
    g.edges.push_back({er.face_a, er.face_b, e});
    g.adjacency[er.face_a].push_back(er.face_b);
    g.adjacency[er.face_b].push_back(er.face_a);
  }
  return g;
}

namespace {

Star close_faces(const Complex& c, const std::vector<int>& faces2, std::set<int> extra_edges,
                 std::set<int> extra_vertices) {
  std::set<int> es = std::move(extra_edges), vs = std::move(extra_vertices);
  for (int f : faces2) {
    for (int e : c.face_edges(f)) es.insert(e);
    for (int v : c.face(f)) vs.insert(v);
  }
  for (int e : es) {
    vs.insert(c.edge(e).v0);
    vs.insert(c.edge(e).v1);
  }
  Star s;
  s.faces = faces2;
  s.edges.assign(es.begin(), es.end());
  s.vertices.assign(vs.begin(), vs.end());
  return s;
}

} // namespace

Star star_of_vertex(const Complex& c, int v) {
  std::vector<int> fs;
  for (int f = 0; f < c.face_count(); ++f) {
    const auto& cy = c.face(f);
    if (std::find(cy.begin(), cy.end(), v) != cy.end()) fs.push_back(f);
  }
  std::set<int> es(c.edges_at_vertex(v).begin(), c.edges_at_vertex(v).end());
  return close_faces(c, fs, std::move(es), {v});
}

Star star_of_edge(const Complex& c, int e) {
  const EdgeRec& er = c.edge(e);
  std::vector<int> fs{er.face_a};
  if (er.interior()) fs.push_back(er.face_b);
  return close_faces(c, fs, {e}, {});
}

Star star_of_face(const Complex& c, int f) { return close_faces(c, {f}, {}, {}); }

bool is_simplicial(const Complex& c) {
  for (int f = 0; f < c.face_count(); ++f)
    if (c.face(f).size() != 3) return false;
  return true;
}

int vertex_slope_count(const Complex& c, int v) {
  if (c.vertex_is_boundary(v))
    throw ValidationError("vertex_slope_count requires an interior vertex, got boundary vertex " +
                          std::to_string(v));
  std::set<LinForm> lines;
  for (int e : c.edges_at_vertex(v)) lines.insert(c.edge(e).line);
  return static_cast<int>(lines.size());
}

} // namespace polyspline
