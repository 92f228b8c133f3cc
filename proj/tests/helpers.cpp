#include "helpers.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "polyspline/error.hpp"

namespace polyspline::testing {

std::string fixture_path(const std::string& name) {
  return std::string(POLYSPLINE_FIXTURE_DIR) + "/" + name + ".json";
}

Complex load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw ValidationError("missing fixture " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_complex(os.str());
}

std::size_t naive_rank(const ExactMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
  std::size_t rank = 0, row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && a[pivot][col].is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[row]);
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      if (a[i][col].is_zero()) continue;
      const Rational f = a[i][col] / a[row][col];
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

Complex apply_affine(const Complex& c, const AffineMap& map) {
  if (map.det().is_zero()) throw ValidationError("affine map is singular");
  Complex::Data d;
  d.name = c.name() + "-affine";
  for (int v = 0; v < c.vertex_count(); ++v) {
    const Vec2& p = c.vertex(v);
    d.vertices.push_back({map.m[0] * p.x + map.m[1] * p.y + map.t[0],
                          map.m[2] * p.x + map.m[3] * p.y + map.t[1]});
  }
  const bool flip = map.det().sign() < 0;
  for (int f = 0; f < c.face_count(); ++f) {
    std::vector<int> cy = c.face(f);
    if (flip) std::reverse(cy.begin(), cy.end());
    d.faces.push_back(std::move(cy));
  }
  return Complex::build(std::move(d));
}

std::vector<AffineMap> random_affine_maps(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  auto entry = [&] { return Rational(static_cast<long>(num(rng)), static_cast<long>(den(rng))); };
  std::vector<AffineMap> maps;
  while (static_cast<int>(maps.size()) < count) {
    AffineMap m{{entry(), entry(), entry(), entry()}, {entry(), entry()}};
    if (!m.det().is_zero()) maps.push_back(std::move(m));
  }
  return maps;
}

namespace {

Complex build_named(std::string name, std::vector<Vec2> verts, std::vector<std::vector<int>> faces) {
  Complex::Data d;
  d.name = std::move(name);
  d.vertices = std::move(verts);
  d.faces = std::move(faces);
  return Complex::build(std::move(d));
}

} // namespace

Complex fan6() {
  const Rational h(1, 2);
  std::vector<Vec2> v = {{0, 0}, {1, 0}, {h, h}, {-h, h}, {-1, 0}, {-h, -h}, {h, -h}};
  std::vector<std::vector<int>> f;
  for (int i = 1; i <= 6; ++i) f.push_back({0, i, i % 6 + 1});
  return build_named("fan6", std::move(v), std::move(f));
}

Complex grid2() {
  // 3x3 vertex grid; each unit square is split by the diagonal pointing at
  // the interior vertex (1,1), giving n(v) = 4 there
  std::vector<Vec2> v;
  for (int y = 0; y <= 2; ++y)
    for (int x = 0; x <= 2; ++x) v.push_back({x, y});
  auto id = [](int x, int y) { return y * 3 + x; };
  std::vector<std::vector<int>> f = {
      {id(0, 0), id(1, 0), id(1, 1)}, {id(0, 0), id(1, 1), id(0, 1)}, // SW square
      {id(1, 0), id(2, 0), id(1, 1)}, {id(2, 0), id(2, 1), id(1, 1)}, // SE
      {id(1, 1), id(2, 1), id(2, 2)}, {id(1, 1), id(2, 2), id(1, 2)}, // NE
      {id(0, 1), id(1, 1), id(0, 2)}, {id(1, 1), id(1, 2), id(0, 2)}, // NW
  };
  return build_named("grid2", std::move(v), std::move(f));
}

Complex random_polygon_triangulation(int ngon, unsigned seed) {
  // strictly convex position: points on a parabola plus a tall apex
  std::vector<Vec2> v;
  for (int i = 0; i + 1 < ngon; ++i)
    v.push_back({i, i * i});
  v.push_back({0, 3 * (ngon - 2) * (ngon - 2) + 1});
  std::mt19937 rng(seed);
  std::vector<int> poly(ngon);
  for (int i = 0; i < ngon; ++i) poly[i] = i;
  std::vector<std::vector<int>> faces;
  while (poly.size() > 3) {
    std::uniform_int_distribution<std::size_t> pick(0, poly.size() - 1);
    const std::size_t i = pick(rng); // every ear of a convex polygon is valid
    const std::size_t n = poly.size();
    faces.push_back({poly[(i + n - 1) % n], poly[i], poly[(i + 1) % n]});
    poly.erase(poly.begin() + static_cast<long>(i));
  }
  faces.push_back({poly[0], poly[1], poly[2]});
  return build_named("tri" + std::to_string(ngon) + "-" + std::to_string(seed), std::move(v),
                     std::move(faces));
}

} // namespace polyspline::testing
