#include "polyspline/linform.hpp"

#include <ostream>

#include "polyspline/error.hpp"

namespace polyspline {

namespace {

/// Clears denominators, divides by the content and fixes the sign so the
/// first nonzero entry is positive. Throws on the zero triple.
std::array<mpz_class, 3> canonical_triple(const Rational& a, const Rational& b, const Rational& c,
                                          const char* what) {
  mpz_class l = lcm(lcm(a.den(), b.den()), c.den());
  std::array<mpz_class, 3> t = {a.num() * (l / a.den()), b.num() * (l / b.den()),
                                c.num() * (l / c.den())};
  mpz_class g = gcd(gcd(t[0], t[1]), t[2]);
  if (sgn(g) == 0) throw ValidationError(std::string(what) + ": zero triple");
  for (auto& v : t) v /= g;
  for (const auto& v : t) {
    if (sgn(v) != 0) {
      if (sgn(v) < 0)
        for (auto& w : t) w = -w;
      break;
    }
  }
  return t;
}

} // namespace

ProjPoint::ProjPoint(const Rational& X, const Rational& Y, const Rational& Z)
    : c_(canonical_triple(X, Y, Z, "projective point")) {}

ProjPoint ProjPoint::affine(const Rational& x, const Rational& y) { return ProjPoint(x, y, 1); }

Rational ProjPoint::affine_x() const {
  if (at_infinity()) throw ValidationError("point at infinity has no affine coordinates");
  return Rational(c_[0], c_[2]);
}

Rational ProjPoint::affine_y() const {
  if (at_infinity()) throw ValidationError("point at infinity has no affine coordinates");
  return Rational(c_[1], c_[2]);
}

std::string ProjPoint::str() const {
  if (!at_infinity()) return "(" + affine_x().str() + ", " + affine_y().str() + ")";
  return "(" + c_[0].get_str() + " : " + c_[1].get_str() + " : 0)";
}

LinForm::LinForm(const Rational& a, const Rational& b, const Rational& c)
    : c_(canonical_triple(a, b, c, "linear form")) {}

LinForm LinForm::through(const Rational& x1, const Rational& y1, const Rational& x2,
                         const Rational& y2) {
  // cross((x1,y1,1), (x2,y2,1))
  return LinForm(y1 - y2, x2 - x1, x1 * y2 - x2 * y1);
}

bool LinForm::contains(const ProjPoint& p) const {
  return sgn(mpz_class(c_[0] * p.x() + c_[1] * p.y() + c_[2] * p.z())) == 0;
}

ProjPoint LinForm::meet(const LinForm& other) const {
  mpz_class X = c_[1] * other.c_[2] - c_[2] * other.c_[1];
  mpz_class Y = c_[2] * other.c_[0] - c_[0] * other.c_[2];
  mpz_class Z = c_[0] * other.c_[1] - c_[1] * other.c_[0];
  if (sgn(X) == 0 && sgn(Y) == 0 && sgn(Z) == 0)
    throw ValidationError("meet of proportional linear forms");
  return ProjPoint(Rational(X), Rational(Y), Rational(Z));
}

std::string LinForm::str() const {
  static const char* vars[3] = {"x", "y", "z"};
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (sgn(c_[i]) == 0) continue;
    mpz_class mag = abs(c_[i]);
    if (out.empty()) {
      if (sgn(c_[i]) < 0) out += "-";
    } else {
      out += sgn(c_[i]) < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str();
    out += vars[i];
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << p.str(); }
std::ostream& operator<<(std::ostream& os, const LinForm& f) { return os << f.str(); }

} // namespace polyspline
