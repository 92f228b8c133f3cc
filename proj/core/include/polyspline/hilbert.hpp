#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyspline/complex.hpp"
#include "polyspline/rational.hpp"
#include "polyspline/xi_graph.hpp"

namespace polyspline {

/// The binomial C(m, 2) evaluated as the polynomial m(m-1)/2 for any
/// rational m. Hilbert-polynomial arithmetic always uses this convention.
Rational binom2(const Rational& m);

/// The count C(m, 2): m(m-1)/2 for m >= 2, otherwise 0. Used wherever an
/// actual dimension of a graded piece is needed.
std::int64_t binom2_count(std::int64_t m);

/// Resolution data of an ideal generated by the (r+1)-st powers of n
/// distinct concurrent linear forms, minimally generated.
struct ResolutionData {
  int n = 0;
  int r = 0;
  std::int64_t alpha = 0; // floor((r+1)/(n-1))
  std::int64_t s1 = 0;    // (n-1)*alpha + n - r - 2
  std::int64_t s2 = 0;    // r + 1 - (n-1)*alpha
};
ResolutionData resolution_data(int n, int r);

/// Per-cycle contribution to the constant term.
struct CycleTerm {
  ProjPoint xi;
  int n = 0;
  int length = 0;
  Rational c;
};

/// Degree-<=2 polynomial a2*k^2 + a1*k + a0 in k with exact rational
/// coefficients, plus the per-term breakdown mirroring the published
/// tables. The breakdown always sums back to the polynomial.
struct HilbPoly {
  Rational a2, a1, a0;

  Rational quad_lin_a2, quad_lin_a1; // free-module part: (f2/2)k^2 + ((3f2-2(r+1)f1o)/2)k
  Rational const_faces_edges;        // f2 + (C(r,2)-1)*f1o
  Rational const_cycles;             // sum of c_j
  std::vector<CycleTerm> cycle_terms;

  Rational eval(const Rational& k) const { return (a2 * k + a1) * k + a0; }
  std::int64_t eval_int(std::int64_t k) const;

  bool same_coeffs(const HilbPoly& o) const { return a2 == o.a2 && a1 == o.a1 && a0 == o.a0; }

  /// e.g. "2k^2 - 24k + 110" or "7/2k^2 - 3/2k + 2".
  std::string str() const;
};

/// Hilbert polynomial of R/<l_1^{r+1}, ..., l_n^{r+1}> for n concurrent
/// lines: a constant polynomial, equal to c_value(n, r).
HilbPoly hp_quotient(int n, int r);

/// The constant c_j of a cycle with n distinct lines. Both published closed
/// forms are evaluated and checked against each other on every call.
Rational c_value(int n, int r);

/// Full planar Hilbert polynomial of C^r over the coned complex, including
/// the per-cycle constant contributions.
HilbPoly planar_hp(const Complex& c, int r);

/// Alfeld-Schumaker vertex correction: sum over j >= 1 of
/// max(r + 1 + j(1 - n_v), 0); terms are strictly decreasing so the sum
/// stops at the first non-positive one.
std::int64_t sigma_vertex(int n_v, int r);

/// Alfeld-Schumaker dimension formula for a simplicial complex; valid for
/// k >= 3r+1. Throws on a non-simplicial complex.
std::int64_t alfeld_schumaker_dim(const Complex& c, int r, std::int64_t k);

} // namespace polyspline
