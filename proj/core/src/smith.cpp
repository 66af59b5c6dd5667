#include "specht/smith.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "local_smith.hpp"
#include "specht/fp_poly.hpp"

namespace specht::snf {

namespace {

struct FpOps {
  using Elem = FpPoly;
  bool zero(const Elem& a) const { return a.is_zero(); }
  bool smaller(const Elem& a, const Elem& b) const { return a.span() < b.span(); }
  std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const { return a.divmod(b); }
  void sub_mul(Elem& a, const Elem& q, const Elem& b) const { a.sub_mul(q, b); }
};

struct IntegerOps {
  using Elem = mpz_class;
  bool zero(const Elem& a) const { return a == 0; }
  bool smaller(const Elem& a, const Elem& b) const { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
  std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {q, r};
  }
  void sub_mul(Elem& a, const Elem& q, const Elem& b) const { mpz_submul(a.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t()); }
};

// Reduces a to diagonal form with row and column operations over a Euclidean
// ring and returns the diagonal (length min(rows, cols), zeros included).
template <class Ops>
std::vector<typename Ops::Elem> diagonalize(std::vector<std::vector<typename Ops::Elem>> a,
                                            const typename Ops::Elem& zero_elem, const Ops& ops) {
  using Elem = typename Ops::Elem;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  const std::size_t steps = std::min(rows, cols);
  std::vector<Elem> diag(steps, zero_elem);

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
  };

  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (ops.zero(a[i][j])) continue;
        if (bi == rows || ops.smaller(a[i][j], a[bi][bj])) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == rows) break;
    std::swap(a[t], a[bi]);
    swap_cols(t, bj);

    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (ops.zero(a[i][t])) continue;
        const Elem q = ops.divmod(a[i][t], a[t][t]).first;
        if (ops.zero(q)) continue;
        for (std::size_t j = t; j < cols; ++j) {
          if (!ops.zero(a[t][j])) ops.sub_mul(a[i][j], q, a[t][j]);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (ops.zero(a[t][j])) continue;
        const Elem q = ops.divmod(a[t][j], a[t][t]).first;
        if (ops.zero(q)) continue;
        for (std::size_t i = t; i < rows; ++i) {
          if (!ops.zero(a[i][t])) ops.sub_mul(a[i][j], q, a[i][t]);
        }
      }
      // Any leftover in the pivot row or column is a remainder smaller than the pivot.
      std::size_t ri = rows, cj = cols;
      const Elem* best = nullptr;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (!ops.zero(a[i][t]) && (!best || ops.smaller(a[i][t], *best))) {
          best = &a[i][t];
          ri = i;
          cj = cols;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (!ops.zero(a[t][j]) && (!best || ops.smaller(a[t][j], *best))) {
          best = &a[t][j];
          cj = j;
          ri = rows;
        }
      }
      if (!best) break;
      if (ri != rows) {
        std::swap(a[t], a[ri]);
      } else {
        swap_cols(t, cj);
      }
    }
    diag[t] = a[t][t];
  }
  return diag;
}

// Integer polynomial sum c_i q^{low+i}, trimmed at both ends.
struct ZPoly {
  LaurentPoly::Exponent low = 0;
  std::vector<mpz_class> c;

  bool zero() const { return c.empty(); }
  LaurentPoly::Exponent span() const { return static_cast<LaurentPoly::Exponent>(c.size()) - 1; }
  LaurentPoly::Exponent high() const { return low + span(); }
  void trim() {
    std::size_t lo = 0;
    while (lo < c.size() && c[lo] == 0) ++lo;
    if (lo == c.size()) {
      c.clear();
      low = 0;
      return;
    }
    while (c.back() == 0) c.pop_back();
    if (lo) {
      c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lo));
      low += static_cast<LaurentPoly::Exponent>(lo);
    }
  }
};

// x <- alpha x - beta q^s y
void combine(ZPoly& x, const mpz_class& alpha, const mpz_class& beta, LaurentPoly::Exponent s, const ZPoly& y) {
  if (alpha != 1) {
    for (auto& v : x.c) v *= alpha;
  }
  if (y.zero() || beta == 0) return;
  const auto ylo = y.low + s;
  const auto yhi = y.high() + s;
  if (x.zero()) {
    x.low = ylo;
    x.c.assign(y.c.size(), 0);
  } else {
    if (ylo < x.low) {
      x.c.insert(x.c.begin(), static_cast<std::size_t>(x.low - ylo), mpz_class(0));
      x.low = ylo;
    }
    if (x.high() < yhi) x.c.resize(static_cast<std::size_t>(yhi - x.low + 1), 0);
  }
  const auto off = static_cast<std::size_t>(ylo - x.low);
  for (std::size_t i = 0; i < y.c.size(); ++i) mpz_submul(x.c[off + i].get_mpz_t(), beta.get_mpz_t(), y.c[i].get_mpz_t());
  x.trim();
}

// Euclidean elimination over Q[q, q^-1] on integer polynomials. Rows and columns
// are only ever multiplied by nonzero integers, which are units over Q.
class RationalElimination {
 public:
  explicit RationalElimination(const PolyMatrix& m) {
    rows_ = m.size();
    cols_ = rows_ ? m.front().size() : 0;
    a_.assign(rows_, std::vector<ZPoly>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) a_[i][j] = to_zpoly(m[i][j]);
      normalize_row(i, 0);
    }
  }

  std::vector<LaurentPoly> run() {
    const std::size_t steps = std::min(rows_, cols_);
    std::vector<LaurentPoly> diag(steps, LaurentPoly(CoeffRing::rationals()));
    for (std::size_t t = 0; t < steps; ++t) {
      std::size_t bi = rows_, bj = cols_;
      for (std::size_t i = t; i < rows_; ++i) {
        for (std::size_t j = t; j < cols_; ++j) {
          if (a_[i][j].zero()) continue;
          if (bi == rows_ || a_[i][j].span() < a_[bi][bj].span()) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == rows_) break;
      std::swap(a_[t], a_[bi]);
      swap_cols(t, bj);
      for (;;) {
        for (std::size_t i = t + 1; i < rows_; ++i) reduce_row(i, t);
        for (std::size_t j = t + 1; j < cols_; ++j) reduce_col(j, t);
        std::size_t ri = rows_, cj = cols_;
        const ZPoly* best = nullptr;
        for (std::size_t i = t + 1; i < rows_; ++i) {
          if (!a_[i][t].zero() && (!best || a_[i][t].span() < best->span())) {
            best = &a_[i][t];
            ri = i;
            cj = cols_;
          }
        }
        for (std::size_t j = t + 1; j < cols_; ++j) {
          if (!a_[t][j].zero() && (!best || a_[t][j].span() < best->span())) {
            best = &a_[t][j];
            cj = j;
            ri = rows_;
          }
        }
        if (!best) break;
        if (ri != rows_) {
          std::swap(a_[t], a_[ri]);
        } else {
          swap_cols(t, cj);
        }
      }
      const ZPoly& d = a_[t][t];
      std::vector<std::pair<LaurentPoly::Exponent, mpq_class>> terms;
      for (std::size_t k = 0; k < d.c.size(); ++k) {
        if (d.c[k] != 0) terms.emplace_back(d.low + static_cast<LaurentPoly::Exponent>(k), mpq_class(d.c[k]));
      }
      diag[t] = LaurentPoly::from_terms(terms, CoeffRing::rationals());
    }
    return diag;
  }

 private:
  static ZPoly to_zpoly(const LaurentPoly& f) {
    ZPoly z;
    if (f.is_zero()) return z;
    z.low = f.low();
    z.c = f.numerators();  // the common denominator is a unit
    z.trim();
    return z;
  }

  void swap_cols(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a_) std::swap(row[x], row[y]);
  }

  // Cancels leading terms of a[i][t] against the pivot until its span is smaller.
  void reduce_row(std::size_t i, std::size_t t) {
    const ZPoly& p = a_[t][t];
    bool touched = false;
    while (!a_[i][t].zero() && a_[i][t].span() >= p.span()) {
      const ZPoly& x = a_[i][t];
      const auto s = x.high() - p.high();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), x.c.back().get_mpz_t(), p.c.back().get_mpz_t());
      const mpz_class alpha = p.c.back() / g;
      const mpz_class beta = x.c.back() / g;
      for (std::size_t j = t; j < cols_; ++j) combine(a_[i][j], alpha, beta, s, a_[t][j]);
      touched = true;
    }
    if (touched) normalize_row(i, t);
  }

  void reduce_col(std::size_t j, std::size_t t) {
    const ZPoly& p = a_[t][t];
    bool touched = false;
    while (!a_[t][j].zero() && a_[t][j].span() >= p.span()) {
      const ZPoly& x = a_[t][j];
      const auto s = x.high() - p.high();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), x.c.back().get_mpz_t(), p.c.back().get_mpz_t());
      const mpz_class alpha = p.c.back() / g;
      const mpz_class beta = x.c.back() / g;
      for (std::size_t i = t; i < rows_; ++i) combine(a_[i][j], alpha, beta, s, a_[i][t]);
      touched = true;
    }
    if (touched) normalize_col(j, t);
  }

  template <class Get>
  static void divide_content(std::size_t from, std::size_t to, Get get) {
    mpz_class g = 0;
    for (std::size_t k = from; k < to; ++k) {
      for (const auto& v : get(k).c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
      }
    }
    if (g <= 1) return;
    for (std::size_t k = from; k < to; ++k) {
      for (auto& v : get(k).c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
  }

  void normalize_row(std::size_t i, std::size_t from) {
    divide_content(from, cols_, [&](std::size_t j) -> ZPoly& { return a_[i][j]; });
  }
  void normalize_col(std::size_t j, std::size_t from) {
    divide_content(from, rows_, [&](std::size_t i) -> ZPoly& { return a_[i][j]; });
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<ZPoly>> a_;
};

CoeffRing common_ring(const PolyMatrix& m) {
  for (const auto& row : m) {
    for (const auto& e : row) return e.ring();
  }
  return CoeffRing::rationals();
}

void check_field_matrix(const PolyMatrix& m, const CoeffRing& ring) {
  if (!ring.is_field()) throw std::invalid_argument("Smith form over a Laurent ring needs coefficients in Q or F_p");
  for (const auto& row : m) {
    if (row.size() != m.front().size()) throw std::invalid_argument("ragged matrix");
    for (const auto& e : row) {
      if (!(e.ring() == ring)) throw std::invalid_argument("mixed coefficient rings in matrix");
    }
  }
}

std::vector<std::vector<FpPoly>> to_fp(const PolyMatrix& m) {
  std::vector<std::vector<FpPoly>> a;
  a.reserve(m.size());
  for (const auto& row : m) {
    std::vector<FpPoly> r;
    r.reserve(row.size());
    for (const auto& e : row) r.push_back(FpPoly::from_laurent(e));
    a.push_back(std::move(r));
  }
  return a;
}

constexpr std::uint32_t kLargePrimes[] = {2147483647U, 2147483629U, 2147483587U, 2147483579U, 2147483563U};

detail::Dense reduce_poly(const LaurentPoly& f, const detail::PrimeField& F) {
  detail::Dense d;
  for (const auto& c : f.numerators()) d.push_back(F.reduce(c));
  detail::trim(d);
  return d;
}

int strip_factor(detail::Dense& r, const detail::Dense& g, const detail::PrimeField& F) {
  int e = 0;
  for (;;) {
    auto [q, rem] = F.divmod(r, g);
    if (!rem.empty()) return e;
    r = std::move(q);
    ++e;
  }
}

std::int64_t prime_free_part(std::int64_t m, std::uint32_t p) {
  while (m % p == 0) m /= p;
  return m;
}

struct LocalPart {
  detail::Dense factor;
  std::vector<int> valuations;
};

// Valuations at every factor of squarefree g met while eliminating, each
// certified by summing to e, the valuation of the determinant.
std::vector<LocalPart> local_parts(const std::vector<std::vector<detail::Dense>>& a, const detail::Dense& g, int e,
                                   const detail::PrimeField& F) {
  std::vector<LocalPart> out;
  std::vector<detail::Dense> pending = {g};
  while (!pending.empty()) {
    detail::Dense h = std::move(pending.back());
    pending.pop_back();
    for (int cap = 1;; cap = std::min(2 * cap, e)) {
      detail::LocalOutcome r = detail::local_valuations(a, h, cap, F);
      if (!r.split.empty()) {
        pending.push_back(F.monic(F.divmod(h, r.split).first));
        pending.push_back(std::move(r.split));
        break;
      }
      int sum = 0;
      for (int v : r.valuations) sum += v;
      if (sum == e) {
        out.push_back({std::move(h), std::move(r.valuations)});
        break;
      }
      if (sum > e || cap >= e) throw std::logic_error("local valuations disagree with the determinant");
    }
  }
  return out;
}

}  // namespace

EDList smith_field_laurent(const PolyMatrix& m) {
  const CoeffRing ring = common_ring(m);
  check_field_matrix(m, ring);
  std::vector<LaurentPoly> diag;
  if (ring.kind() == CoeffRing::Kind::PrimeField) {
    for (const auto& d : diagonalize(to_fp(m), FpPoly(ring.characteristic()), FpOps{})) diag.push_back(d.to_laurent());
    return normalize_diagonal(std::move(diag), ring);
  }
  // Clearing the denominators of each row only changes it by a unit.
  PolyMatrix integral = m;
  for (auto& row : integral) {
    mpz_class den = 1;
    for (const auto& e : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.denominator().get_mpz_t());
    for (auto& e : row) e = e.scaled(mpq_class(den)).to_ring(CoeffRing::integers());
  }
  return SmithSession(std::move(integral)).over_q();
}

EDList smith_integer(const std::vector<std::vector<mpz_class>>& m) {
  const CoeffRing z = CoeffRing::integers();
  std::vector<LaurentPoly> diag;
  for (const auto& d : diagonalize(m, mpz_class(0), IntegerOps{})) diag.push_back(LaurentPoly::constant(d, z));
  return normalize_diagonal(std::move(diag), z);
}

struct SmithSession::Analysis {
  detail::IntegerPolyMatrix poly;
  std::vector<std::pair<std::int64_t, int>> exponents;  // (m, e): Phi_m^e exactly divides det
  LaurentPoly det = LaurentPoly(CoeffRing::integers());
  std::vector<std::pair<std::uint32_t, std::vector<std::vector<detail::Dense>>>> reduced;

  const std::vector<std::vector<detail::Dense>>& reduced_mod(const detail::PrimeField& F) {
    for (const auto& [p, a] : reduced) {
      if (p == F.p()) return a;
    }
    reduced.emplace_back(F.p(), detail::reduce(poly, F));
    return reduced.back().second;
  }
};

SmithSession::SmithSession(PolyMatrix m_over_z) : m_(std::move(m_over_z)) {}

SmithSession::Analysis* SmithSession::analysis() {
  if (analysis_done_) return analysis_.get();
  analysis_done_ = true;
  if (m_.empty()) return nullptr;
  auto poly = detail::to_integer_poly(m_);
  if (!poly) return nullptr;
  for (const std::uint32_t P : kLargePrimes) {
    if (poly->degree_bound + 1 >= P) continue;
    const detail::PrimeField F(P);
    detail::Dense r = detail::determinant_mod(*poly, F);
    if (r.empty()) continue;
    std::int64_t low = 0;
    while (r[static_cast<std::size_t>(low)] == 0) ++low;
    r.erase(r.begin(), r.begin() + low);
    auto an = std::make_shared<Analysis>();
    const std::int64_t limit = std::min<std::int64_t>(6 * static_cast<std::int64_t>(r.size()) + 6, 1000);
    for (std::int64_t m = 1; r.size() > 1 && m <= limit; ++m) {
      const int e = strip_factor(r, reduce_poly(qlaurent::cyclotomic(m), F), F);
      if (e) an->exponents.emplace_back(m, e);
    }
    if (r.size() != 1) return nullptr;
    // the integer content is fixed by the exact determinant at q = 2
    mpz_class denom = mpz_class(1) << static_cast<mp_bitcnt_t>(low);
    LaurentPoly det = LaurentPoly::constant(1, CoeffRing::integers());
    for (const auto& [m, e] : an->exponents) {
      const LaurentPoly phi = qlaurent::cyclotomic(m);
      const mpq_class at_two = phi.evaluate(2);
      for (int k = 0; k < e; ++k) {
        denom *= at_two.get_num();
        det *= phi;
      }
    }
    const mpz_class value = detail::determinant_at(*poly, 2);
    if (!mpz_divisible_p(value.get_mpz_t(), denom.get_mpz_t())) return nullptr;
    const mpz_class c = value / denom;
    if (F.reduce(c) != r[0]) return nullptr;
    an->det = det.scaled(mpq_class(c)).shifted(low + poly->shift_total);
    an->poly = std::move(*poly);
    analysis_ = std::move(an);
    return analysis_.get();
  }
  return nullptr;
}

const EDList& SmithSession::over_q() {
  if (q_) return *q_;
  const CoeffRing q = CoeffRing::rationals();
  Analysis* an = analysis();
  if (!an) {
    q_ = normalize_diagonal(RationalElimination(matrix_to_ring(m_, q)).run(), q);
    return *q_;
  }
  std::vector<LaurentPoly> diag(m_.size(), LaurentPoly::constant(1, q));
  for (const auto& [m, e] : an->exponents) {
    // Valuations at Phi_m over Q agree with those at Phi_m mod P for all but
    // finitely many primes P; two agreeing primes are taken as the answer.
    std::vector<std::vector<int>> seen;
    std::optional<std::vector<int>> found;
    for (const std::uint32_t P : kLargePrimes) {
      if (an->poly.degree_bound + 1 >= P) continue;
      const detail::PrimeField F(P);
      const auto parts = local_parts(an->reduced_mod(F), reduce_poly(qlaurent::cyclotomic(m), F), e, F);
      bool uniform = true;
      for (const auto& part : parts) uniform = uniform && part.valuations == parts.front().valuations;
      if (!uniform) continue;
      if (std::find(seen.begin(), seen.end(), parts.front().valuations) != seen.end()) {
        found = parts.front().valuations;
        break;
      }
      seen.push_back(parts.front().valuations);
    }
    if (!found && !seen.empty()) found = seen.front();
    if (!found) throw std::logic_error("no prime gave consistent valuations");
    const LaurentPoly phi = qlaurent::cyclotomic(m).to_ring(q);
    for (std::size_t i = 0; i < diag.size(); ++i) {
      for (int k = 0; k < (*found)[i]; ++k) diag[i] *= phi;
    }
  }
  q_ = normalize_diagonal(std::move(diag), q);
  return *q_;
}

const EDList& SmithSession::over_z() {
  if (!z_) z_ = smith_integer(specialize_at_one(m_));
  return *z_;
}

std::optional<LaurentPoly> SmithSession::integer_determinant() {
  Analysis* an = analysis();
  if (!an) return std::nullopt;
  return an->det;
}

EDList SmithSession::over(const CoeffRing& target) {
  switch (target.kind()) {
    case CoeffRing::Kind::Integer:
      return over_z();
    case CoeffRing::Kind::Rational:
      return over_q();
    case CoeffRing::Kind::PrimeField:
      break;
  }
  Analysis* an = analysis();
  const detail::PrimeField F(target.characteristic());
  detail::Dense det = an ? reduce_poly(an->det, F) : detail::Dense{};
  if (det.empty()) return smith_field_laurent(matrix_to_ring(m_, target));
  std::vector<std::int64_t> base;
  for (const auto& [m, e] : an->exponents) {
    const std::int64_t b = prime_free_part(m, F.p());
    if (std::find(base.begin(), base.end(), b) == base.end()) base.push_back(b);
  }
  std::vector<LaurentPoly> diag(m_.size(), LaurentPoly::constant(1, target));
  for (const std::int64_t b : base) {
    const detail::Dense g = F.monic(reduce_poly(qlaurent::cyclotomic(b), F));
    const int e = strip_factor(det, g, F);
    if (e == 0) continue;
    for (const auto& part : local_parts(an->reduced_mod(F), g, e, F)) {
      const LaurentPoly h = FpPoly(F.p(), 0, part.factor).to_laurent();
      for (std::size_t i = 0; i < diag.size(); ++i) {
        for (int k = 0; k < part.valuations[i]; ++k) diag[i] *= h;
      }
    }
  }
  if (det.size() != 1) throw std::logic_error("determinant has factors outside the cyclotomic base");
  return normalize_diagonal(std::move(diag), target);
}

EDList smith_over(const PolyMatrix& m_over_z, const CoeffRing& target) {
  SmithSession s(m_over_z);
  return s.over(target);
}

}  // namespace specht::snf
