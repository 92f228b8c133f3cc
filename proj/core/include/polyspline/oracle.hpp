#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "polyspline/complex.hpp"
#include "polyspline/linform.hpp"
#include "polyspline/rational.hpp"

namespace polyspline {

/// Dense matrix of exact rationals. Rank is computed exactly, over the
/// integers after clearing denominators row by row.
class ExactMatrix {
public:
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Rational v) { a_[i * cols_ + j] = std::move(v); }

  std::size_t rank() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

/// Monomial exponents (i, j, m), i + j + m = k, in a fixed deterministic
/// order (i descending, then j descending). Length C(k+2, 2).
std::vector<std::array<int, 3>> homog_basis(int k);

/// Degree-k component of the Billera-Rose map [d | D]:
/// domain (R_k)^{f_2} (+) (R_{k-r-1})^{f^0_1}, codomain (R_k)^{f^0_1}.
/// The d block carries +1 on the lower-indexed incident face and -1 on the
/// other; the D block multiplies by l_tau^{r+1}.
ExactMatrix build_phi(const Complex& c, int r, int k);

/// dim C^r_k(P) as the kernel dimension of the degree-k Billera-Rose map,
/// by exact rank.
std::int64_t spline_dim_oracle(const Complex& c, int r, int k);

/// spline_dim_oracle over k in [kmin, kmax]; cells are independent and are
/// evaluated concurrently (largest first) on a small thread pool.
std::vector<std::int64_t> spline_dim_oracle_range(const Complex& c, int r, int kmin, int kmax);

/// Dimension of the degree-k part of R/<l_i^{r+1}> for forms through a
/// common projective point. Throws if the forms are not concurrent or
/// fewer than two distinct forms are given.
std::int64_t ideal_dim_oracle(const std::vector<LinForm>& forms, int r, int k);

} // namespace polyspline
