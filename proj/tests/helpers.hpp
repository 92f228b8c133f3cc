#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "polyspline/complex.hpp"
#include "polyspline/oracle.hpp"
#include "polyspline/rational.hpp"

namespace polyspline::testing {

std::string fixture_path(const std::string& name);
Complex load_fixture(const std::string& name);

/// Independent rank oracle: dense rational Gaussian elimination with
/// first-nonzero pivoting. Deliberately shares no code with
/// ExactMatrix::rank.
std::size_t naive_rank(const ExactMatrix& m);

/// Invertible rational affine map x -> M x + t.
struct AffineMap {
  std::array<Rational, 4> m; // row-major 2x2
  std::array<Rational, 2> t;
  Rational det() const { return m[0] * m[3] - m[1] * m[2]; }
};

/// Applies the map to every vertex and revalidates. Face cycles are
/// reversed when det < 0 so orientation stays counterclockwise.
Complex apply_affine(const Complex& c, const AffineMap& map);

/// Deterministic pseudo-random invertible maps with small rational entries;
/// includes reflections.
std::vector<AffineMap> random_affine_maps(unsigned seed, int count);

// deterministic simplicial fixtures beyond the bundled ones
Complex fan6();           // hexagon fan around one interior vertex, n(v) = 3
Complex grid2();          // 2x2 criss-cross grid, one interior vertex, n(v) = 4
Complex random_polygon_triangulation(int ngon, unsigned seed);

} // namespace polyspline::testing
