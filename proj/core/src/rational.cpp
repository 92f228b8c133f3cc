#include "polyspline/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "polyspline/error.hpp"

namespace polyspline {

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (sgn(den) == 0) throw ValidationError("rational with zero denominator");
  q_.canonicalize();
}

namespace {

mpz_class parse_int(std::string_view s, const char* what) {
  if (s.empty()) throw ValidationError(std::string("empty ") + what);
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ValidationError(std::string("malformed ") + what);
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ValidationError(std::string("malformed ") + what + ": '" + std::string(s) + "'");
  }
  return mpz_class(std::string(s), 10);
}

} // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, "integer"));
  const mpz_class num = parse_int(text.substr(0, slash), "numerator");
  const mpz_class den = parse_int(text.substr(slash + 1), "denominator");
  if (sgn(den) <= 0) throw ValidationError("denominator must be a positive integer: '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw ValidationError("division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw ValidationError("not an integer: " + str());
  const mpz_class& n = num();
  if (!n.fits_slong_p()) throw ValidationError("integer out of range: " + str());
  return static_cast<std::int64_t>(n.get_si());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace polyspline
