#include "polyspline/hilbert.hpp"

#include <stdexcept>

#include "polyspline/error.hpp"

namespace polyspline {

Rational binom2(const Rational& m) { return m * (m - Rational(1)) / Rational(2); }

std::int64_t binom2_count(std::int64_t m) { return m >= 2 ? m * (m - 1) / 2 : 0; }

ResolutionData resolution_data(int n, int r) {
  if (n < 2) throw ValidationError("resolution data needs n >= 2 generators");
  if (r < 0) throw ValidationError("smoothness r must be >= 0");
  ResolutionData d;
  d.n = n;
  d.r = r;
  d.alpha = (r + 1) / (n - 1);
  d.s1 = static_cast<std::int64_t>(n - 1) * d.alpha + n - r - 2;
  d.s2 = r + 1 - static_cast<std::int64_t>(n - 1) * d.alpha;
  // resolution bookkeeping; a failure here is a transcription bug, not bad
  // input
  if (d.s1 < 0 || d.s2 < 0 || d.s1 + d.s2 != n - 1)
    throw std::logic_error("resolution data out of range");
  if (d.s1 * (r + 1 + d.alpha) + d.s2 * (r + 2 + d.alpha) !=
      static_cast<std::int64_t>(n) * (r + 1))
    throw std::logic_error("resolution degree bookkeeping failed");
  return d;
}

std::int64_t HilbPoly::eval_int(std::int64_t k) const {
  Rational v = eval(Rational(mpz_class(static_cast<long>(k))));
  return v.to_int64();
}

std::string HilbPoly::str() const {
  struct Term {
    const Rational* coeff;
    const char* var;
  };
  const Term terms[3] = {{&a2, "k^2"}, {&a1, "k"}, {&a0, ""}};
  std::string out;
  for (const auto& [coeff, var] : terms) {
    if (coeff->is_zero()) continue;
    const Rational mag = coeff->abs();
    if (out.empty()) {
      if (coeff->sign() < 0) out += "-";
    } else {
      out += coeff->sign() < 0 ? " - " : " + ";
    }
    if (!(mag == Rational(1)) || var[0] == '\0') out += mag.str();
    out += var;
  }
  return out.empty() ? "0" : out;
}

HilbPoly hp_quotient(int n, int r) {
  const ResolutionData d = resolution_data(n, r);
  // expand C(k+2,2) - n C(k-r+1,2) + s1 C(k-r+1-a,2) + s2 C(k-r-a,2)
  // as a polynomial in k; C(m,2) = m(m-1)/2 contributes
  //   (1/2)k^2 + (c - 1/2)k + c(c-1)/2  for m = k + c
  auto add_shift = [](HilbPoly& p, const Rational& mult, const Rational& c) {
    p.a2 += mult / Rational(2);
    p.a1 += mult * (c - Rational(1, 2));
    p.a0 += mult * binom2(c);
  };
  HilbPoly p;
  add_shift(p, Rational(1), Rational(2));
  add_shift(p, Rational(-n), Rational(1 - r));
  add_shift(p, Rational(mpz_class(static_cast<long>(d.s1))),
            Rational(mpz_class(static_cast<long>(1 - r - d.alpha))));
  add_shift(p, Rational(mpz_class(static_cast<long>(d.s2))),
            Rational(mpz_class(static_cast<long>(-r - d.alpha))));
  if (!p.a2.is_zero() || !p.a1.is_zero())
    throw std::logic_error("quotient Hilbert polynomial is not constant");
  p.const_cycles = p.a0; // the whole constant is the cycle-ideal contribution
  return p;
}

Rational c_value(int n, int r) {
  const ResolutionData d = resolution_data(n, r);
  const Rational alpha(mpz_class(static_cast<long>(d.alpha)));
  const Rational expr1 = Rational(1) - Rational(n) * binom2(Rational(r)) +
                         Rational(mpz_class(static_cast<long>(d.s1))) * binom2(Rational(r) + alpha) +
                         Rational(mpz_class(static_cast<long>(d.s2))) * binom2(Rational(r) + alpha + 1);
  const Rational expr2 =
      binom2(Rational(r + 2)) +
      alpha / Rational(2) * (Rational(2 * r + 3) + alpha - Rational(n) * (Rational(1) + alpha));
  if (!(expr1 == expr2))
    throw std::logic_error("the two closed forms for c(n=" + std::to_string(n) +
                           ", r=" + std::to_string(r) + ") disagree");
  return expr1;
}

HilbPoly planar_hp(const Complex& c, int r) {
  if (r < 0) throw ValidationError("smoothness r must be >= 0");
  const FaceCounts fc = face_counts(c);
  const Rational f2(mpz_class(static_cast<long>(fc.faces)));
  const Rational f1o(mpz_class(static_cast<long>(fc.interior_edges)));

  HilbPoly p;
  p.quad_lin_a2 = f2 / Rational(2);
  p.quad_lin_a1 = (Rational(3) * f2 - Rational(2 * (r + 1)) * f1o) / Rational(2);
  p.const_faces_edges = f2 + (binom2(Rational(r)) - Rational(1)) * f1o;
  p.const_cycles = Rational(0);
  for (const auto& [xi, cycles] : all_cycles(c)) {
    for (const CycleData& cd : cycles) {
      Rational cj = c_value(cd.distinct_lines, r);
      p.const_cycles += cj;
      p.cycle_terms.push_back({xi, cd.distinct_lines, cd.length, std::move(cj)});
    }
  }
  p.a2 = p.quad_lin_a2;
  p.a1 = p.quad_lin_a1;
  p.a0 = p.const_faces_edges + p.const_cycles;
  return p;
}

std::int64_t sigma_vertex(int n_v, int r) {
  if (n_v < 1) throw ValidationError("slope count must be >= 1");
  std::int64_t total = 0;
  for (std::int64_t j = 1;; ++j) {
    const std::int64_t term = r + 1 + j * (1 - n_v);
    if (term <= 0) break;
    total += term;
  }
  return total;
}

std::int64_t alfeld_schumaker_dim(const Complex& c, int r, std::int64_t k) {
  if (!is_simplicial(c))
    throw ValidationError("Alfeld-Schumaker formula requires a simplicial complex");
  if (r < 0 || k < 0) throw ValidationError("r and k must be >= 0");
  const FaceCounts fc = face_counts(c);
  std::int64_t dim = binom2_count(k + 2) + binom2_count(k - r + 1) * fc.interior_edges -
                     (binom2_count(k + 2) - binom2_count(r + 2)) * fc.interior_vertices;
  for (int v = 0; v < c.vertex_count(); ++v)
    if (!c.vertex_is_boundary(v)) dim += sigma_vertex(vertex_slope_count(c, v), r);
  return dim;
}

} // namespace polyspline
