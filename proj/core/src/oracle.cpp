#include "polyspline/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

#include "polyspline/error.hpp"
#include "polyspline/hilbert.hpp"

namespace polyspline {

namespace {

// ---------------------------------------------------------------------------
// Exact rank by integer-preserving elimination on sparse rows.
//
// Rows are kept as integer vectors (content-normalized); each elimination
// step replaces row_i by pivot*row_i - a_ik*row_pivot, which stays in Z.
// Pivots are chosen Markowitz-style with a strong preference for unit
// entries, which keeps both fill-in and entry growth low on the highly
// structured matrices produced by build_phi.
// ---------------------------------------------------------------------------

struct SparseRow {
  std::vector<std::pair<std::int32_t, mpz_class>> e; // sorted by column
};

void normalize_content(SparseRow& r) {
  if (r.e.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : r.e) {
    g = gcd(g, v);
    if (g == 1) break;
  }
  if (g > 1)
    for (auto& [c, v] : r.e) v /= g;
}

/// r2 <- p*r2 - u*r1 (merging sorted column lists), then content-normalize.
void eliminate(SparseRow& r2, const SparseRow& r1, const mpz_class& p, const mpz_class& u) {
  std::vector<std::pair<std::int32_t, mpz_class>> out;
  out.reserve(r1.e.size() + r2.e.size());
  auto i1 = r1.e.begin();
  for (auto i2 = r2.e.begin(); i2 != r2.e.end() || i1 != r1.e.end();) {
    if (i2 == r2.e.end() || (i1 != r1.e.end() && i1->first < i2->first)) {
      mpz_class v = -u * i1->second;
      if (sgn(v) != 0) out.emplace_back(i1->first, std::move(v));
      ++i1;
    } else if (i1 == r1.e.end() || i2->first < i1->first) {
      mpz_class v = p * i2->second;
      if (sgn(v) != 0) out.emplace_back(i2->first, std::move(v));
      ++i2;
    } else {
      mpz_class v = p * i2->second - u * i1->second;
      if (sgn(v) != 0) out.emplace_back(i1->first, std::move(v));
      ++i1;
      ++i2;
    }
  }
  r2.e = std::move(out);
  normalize_content(r2);
}

std::size_t rank_sparse(std::vector<SparseRow> rows, std::size_t ncols) {
  std::vector<std::int32_t> col_count(ncols, 0);
  std::vector<bool> active(rows.size(), true);
  for (const auto& r : rows)
    for (const auto& [c, v] : r.e) ++col_count[c];

  std::size_t rank = 0;
  while (true) {
    // pivot choice: prefer units, then minimal Markowitz cost
    int best_row = -1;
    std::int32_t best_col = -1;
    bool best_unit = false;
    long best_score = 0;
    std::size_t best_bits = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!active[i] || rows[i].e.empty()) continue;
      const long rnnz = static_cast<long>(rows[i].e.size()) - 1;
      for (const auto& [c, v] : rows[i].e) {
        const bool unit = (v == 1 || v == -1);
        const long score = rnnz * (col_count[c] - 1);
        const std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
        if (best_row < 0 || std::tuple(!unit, score, bits) <
                                std::tuple(!best_unit, best_score, best_bits)) {
          best_row = static_cast<int>(i);
          best_col = c;
          best_unit = unit;
          best_score = score;
          best_bits = bits;
        }
      }
    }
    if (best_row < 0) break;
    ++rank;

    SparseRow& prow = rows[best_row];
    mpz_class pval;
    for (const auto& [c, v] : prow.e)
      if (c == best_col) pval = v;
    active[best_row] = false;
    for (const auto& [c, v] : prow.e) --col_count[c];

    if (col_count[best_col] == 0) continue; // no other row touches the pivot column
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!active[i]) continue;
      auto it = std::lower_bound(rows[i].e.begin(), rows[i].e.end(), best_col,
                                 [](const auto& ev, std::int32_t c) { return ev.first < c; });
      if (it == rows[i].e.end() || it->first != best_col) continue;
      const mpz_class u = it->second;
      for (const auto& [c, v] : rows[i].e) --col_count[c];
      eliminate(rows[i], prow, pval, u);
      for (const auto& [c, v] : rows[i].e) ++col_count[c];
    }
  }
  return rank;
}

} // namespace

std::size_t ExactMatrix::rank() const {
  std::vector<SparseRow> rows;
  rows.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    SparseRow r;
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) l = lcm(l, at(i, j).den());
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& v = at(i, j);
      if (v.is_zero()) continue;
      r.e.emplace_back(static_cast<std::int32_t>(j), mpz_class(v.num() * (l / v.den())));
    }
    normalize_content(r);
    if (!r.e.empty()) rows.push_back(std::move(r));
  }
  return rank_sparse(std::move(rows), cols_);
}

std::vector<std::array<int, 3>> homog_basis(int k) {
  if (k < 0) return {};
  std::vector<std::array<int, 3>> basis;
  basis.reserve(static_cast<std::size_t>(binom2_count(k + 2)));
  for (int i = k; i >= 0; --i)
    for (int j = k - i; j >= 0; --j) basis.push_back({i, j, k - i - j});
  return basis;
}

namespace {

/// Exponent-keyed coefficients of (a x + b y + c z)^p. Canonical forms have
/// integer coefficients, so the expansion stays integral.
std::map<std::array<int, 3>, mpz_class> form_power(const LinForm& f, int p) {
  std::map<std::array<int, 3>, mpz_class> cur{{{0, 0, 0}, 1}};
  const std::array<std::pair<std::array<int, 3>, mpz_class>, 3> lin = {
      std::pair{std::array<int, 3>{1, 0, 0}, f.a()},
      std::pair{std::array<int, 3>{0, 1, 0}, f.b()},
      std::pair{std::array<int, 3>{0, 0, 1}, f.c()}};
  for (int step = 0; step < p; ++step) {
    std::map<std::array<int, 3>, mpz_class> next;
    for (const auto& [e1, c1] : cur)
      for (const auto& [e2, c2] : lin) {
        if (sgn(c2) == 0) continue;
        next[{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}] += c1 * c2;
      }
    std::erase_if(next, [](const auto& kv) { return sgn(kv.second) == 0; });
    cur = std::move(next);
  }
  return cur;
}

/// Index of an exponent triple within homog_basis(k): rows i = k, k-1, ...
/// have lengths 1, 2, ...; within a row j runs from k - i down to 0.
struct BasisIndex {
  explicit BasisIndex(int k) : k_(k) {}
  std::size_t operator()(const std::array<int, 3>& e) const {
    const long row = k_ - e[0];
    return static_cast<std::size_t>(row * (row + 1) / 2 + (row - e[1]));
  }

private:
  int k_;
};

} // namespace

ExactMatrix build_phi(const Complex& c, int r, int k) {
  if (r < 0 || k < 0) throw ValidationError("r and k must be >= 0");
  const auto basis = homog_basis(k);
  const std::size_t nb = basis.size();
  const int ke = k - r - 1;
  const std::size_t nbe = ke >= 0 ? static_cast<std::size_t>(binom2_count(ke + 2)) : 0;
  const auto& interior = c.interior_edges();
  const std::size_t f2 = static_cast<std::size_t>(c.face_count());

  ExactMatrix m(interior.size() * nb, f2 * nb + interior.size() * nbe);
  const BasisIndex bidx(k);
  const auto basis_e = homog_basis(ke);
  for (std::size_t t = 0; t < interior.size(); ++t) {
    const EdgeRec& er = c.edge(interior[t]);
    const std::size_t row0 = t * nb;
    for (std::size_t mi = 0; mi < nb; ++mi) {
      m.set(row0 + mi, static_cast<std::size_t>(er.face_a) * nb + mi, Rational(1));
      m.set(row0 + mi, static_cast<std::size_t>(er.face_b) * nb + mi, Rational(-1));
    }
    if (ke < 0) continue;
    const auto power = form_power(er.line, r + 1);
    for (std::size_t mei = 0; mei < basis_e.size(); ++mei) {
      const std::size_t col = f2 * nb + t * nbe + mei;
      for (const auto& [e, coeff] : power) {
        const std::array<int, 3> tot = {e[0] + basis_e[mei][0], e[1] + basis_e[mei][1],
                                        e[2] + basis_e[mei][2]};
        m.set(row0 + bidx(tot), col, Rational(mpz_class(coeff)));
      }
    }
  }
  return m;
}

std::int64_t spline_dim_oracle(const Complex& c, int r, int k) {
  if (r < 0 || k < 0) throw ValidationError("r and k must be >= 0");
  const std::int64_t f2 = c.face_count();
  const std::int64_t f1o = static_cast<std::int64_t>(c.interior_edges().size());
  std::int64_t domain = f2 * binom2_count(k + 2);
  if (k >= r + 1) domain += f1o * binom2_count(k - r + 1);
  const ExactMatrix phi = build_phi(c, r, k);
  return domain - static_cast<std::int64_t>(phi.rank());
}

std::vector<std::int64_t> spline_dim_oracle_range(const Complex& c, int r, int kmin, int kmax) {
  if (kmin < 0 || kmax < kmin) throw ValidationError("need 0 <= kmin <= kmax");
  std::vector<std::int64_t> out(kmax - kmin + 1, 0);
  std::vector<int> ks(out.size());
  std::iota(ks.begin(), ks.end(), kmin);
  std::sort(ks.begin(), ks.end(), std::greater<>()); // largest cells first
  std::atomic<std::size_t> next{0};
  const unsigned pool =
      std::max(1u, std::min({std::thread::hardware_concurrency(), 4u,
                             static_cast<unsigned>(ks.size())}));
  std::vector<std::thread> workers;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < pool; ++w)
    workers.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= ks.size()) return;
        try {
          out[ks[i] - kmin] = spline_dim_oracle(c, r, ks[i]);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

std::int64_t ideal_dim_oracle(const std::vector<LinForm>& forms, int r, int k) {
  if (r < 0 || k < 0) throw ValidationError("r and k must be >= 0");
  std::vector<LinForm> distinct;
  for (const LinForm& f : forms)
    if (std::find(distinct.begin(), distinct.end(), f) == distinct.end()) distinct.push_back(f);
  if (distinct.size() < 2)
    throw ValidationError("ideal_dim_oracle needs at least two non-proportional forms");
  const ProjPoint common = distinct[0].meet(distinct[1]);
  for (const LinForm& f : distinct)
    if (!f.contains(common))
      throw ValidationError("forms do not pass through a common projective point");

  const std::size_t nb = static_cast<std::size_t>(binom2_count(k + 2));
  const int ke = k - r - 1;
  if (ke < 0) return static_cast<std::int64_t>(nb);
  const auto basis_e = homog_basis(ke);
  const BasisIndex bidx(k);
  ExactMatrix m(nb, forms.size() * basis_e.size());
  for (std::size_t fi = 0; fi < forms.size(); ++fi) {
    const auto power = form_power(forms[fi], r + 1);
    for (std::size_t mei = 0; mei < basis_e.size(); ++mei) {
      const std::size_t col = fi * basis_e.size() + mei;
      for (const auto& [e, coeff] : power) {
        const std::array<int, 3> tot = {e[0] + basis_e[mei][0], e[1] + basis_e[mei][1],
                                        e[2] + basis_e[mei][2]};
        m.set(bidx(tot), col, Rational(mpz_class(coeff)));
      }
    }
  }
  return static_cast<std::int64_t>(nb) - static_cast<std::int64_t>(m.rank());
}

} // namespace polyspline
