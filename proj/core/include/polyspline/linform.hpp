#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "polyspline/rational.hpp"

namespace polyspline {

/// A projective point (X : Y : Z) in canonical normalization: coprime
/// integer coordinates whose first nonzero entry is positive. Z != 0 encodes
/// the affine point (X/Z, Y/Z); Z == 0 is a direction (the pencil of lines
/// parallel to (X, Y)).
class ProjPoint {
public:
  ProjPoint(const Rational& X, const Rational& Y, const Rational& Z);
  static ProjPoint affine(const Rational& x, const Rational& y);

  const mpz_class& x() const { return c_[0]; }
  const mpz_class& y() const { return c_[1]; }
  const mpz_class& z() const { return c_[2]; }
  bool at_infinity() const { return sgn(c_[2]) == 0; }

  Rational affine_x() const; ///< X/Z; throws at infinity
  Rational affine_y() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.c_ < b.c_; }

  /// "(p, q)" for affine points (exact rationals), "(X : Y : 0)" otherwise.
  std::string str() const;

private:
  std::array<mpz_class, 3> c_;
};

/// Homogeneous linear form a*x + b*y + c*z on the cone over the plane z = 1.
/// Canonical: coprime integer coefficients, first nonzero positive, so two
/// forms cut the same line iff their triples are identical.
class LinForm {
public:
  LinForm(const Rational& a, const Rational& b, const Rational& c);

  /// The form vanishing on the homogenized span of two distinct affine
  /// points, computed as the cross product of (x1,y1,1) and (x2,y2,1).
  static LinForm through(const Rational& x1, const Rational& y1,
                         const Rational& x2, const Rational& y2);

  const mpz_class& a() const { return c_[0]; }
  const mpz_class& b() const { return c_[1]; }
  const mpz_class& c() const { return c_[2]; }

  bool contains(const ProjPoint& p) const;

  /// Projective intersection point of two non-proportional forms.
  ProjPoint meet(const LinForm& other) const;

  friend bool operator==(const LinForm& a, const LinForm& b) { return a.c_ == b.c_; }
  friend bool operator<(const LinForm& a, const LinForm& b) { return a.c_ < b.c_; }

  /// Algebraic rendering, e.g. "x - y" or "2x + 3y - 7z".
  std::string str() const;

private:
  std::array<mpz_class, 3> c_;
};

std::ostream& operator<<(std::ostream& os, const ProjPoint& p);
std::ostream& operator<<(std::ostream& os, const LinForm& f);

} // namespace polyspline
