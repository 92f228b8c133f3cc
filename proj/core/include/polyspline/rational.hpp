#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace polyspline {

/// Exact rational number. Always held in lowest terms with a positive
/// denominator; every operation is exact.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(static_cast<signed long>(n)) {} // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& n) : q_(n) {}               // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "p" or "p/q" with q a positive integer. Throws ValidationError
  /// on anything else (including q == 0 or q < 0).
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
  Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
  Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }
  Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  /// "p" when integral, else "p/q".
  std::string str() const;

  /// Exact conversion; throws ValidationError if not an integer or out of
  /// int64 range.
  std::int64_t to_int64() const;

private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_; // canonical
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace polyspline
