#include "specht/matrix.hpp"

#include <stdexcept>

namespace specht {

using qlaurent::CoeffRing;
using qlaurent::LaurentPoly;

PolyMatrix matrix_to_ring(const PolyMatrix& m, CoeffRing ring) {
  PolyMatrix r = m;
  for (auto& row : r) {
    for (auto& e : row) e = e.to_ring(ring);
  }
  return r;
}

PolyMatrix matrix_multiply(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t inner = b.size();
  if (a.front().size() != inner) throw std::invalid_argument("matrix shapes do not match");
  const CoeffRing ring = a.front().front().ring();
  PolyMatrix r(a.size(), std::vector<LaurentPoly>(b.front().size(), LaurentPoly(ring)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) {
        if (!b[k][j].is_zero()) r[i][j].add_product(a[i][k], b[k][j]);
      }
    }
  }
  return r;
}

PolyMatrix matrix_transpose(const PolyMatrix& m) {
  if (m.empty()) return {};
  PolyMatrix r(m.front().size(), std::vector<LaurentPoly>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) r[j][i] = m[i][j];
  }
  return r;
}

PolyMatrix diagonal_matrix(const std::vector<LaurentPoly>& diag, CoeffRing ring) {
  PolyMatrix r(diag.size(), std::vector<LaurentPoly>(diag.size(), LaurentPoly(ring)));
  for (std::size_t i = 0; i < diag.size(); ++i) r[i][i] = diag[i];
  return r;
}

bool is_symmetric(const PolyMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (!(m[i][j] == m[j][i])) return false;
    }
  }
  return true;
}

ScalarMatrix specialize_matrix(const PolyMatrix& m, const mpq_class& q0, CoeffRing field) {
  ScalarMatrix r;
  r.reserve(m.size());
  for (const auto& row : m) {
    std::vector<mpq_class> out;
    out.reserve(row.size());
    for (const auto& e : row) out.push_back(e.to_ring(field).evaluate(q0));
    r.push_back(std::move(out));
  }
  return r;
}

std::vector<std::vector<mpz_class>> specialize_at_one(const PolyMatrix& m) {
  std::vector<std::vector<mpz_class>> r;
  for (const auto& row : m) {
    std::vector<mpz_class> out;
    for (const auto& e : row) {
      const mpq_class v = qlaurent::specialize_at_one(e);
      if (v.get_den() != 1) throw std::domain_error("entry is not integral at q = 1");
      out.push_back(v.get_num());
    }
    r.push_back(std::move(out));
  }
  return r;
}

std::size_t scalar_rank(ScalarMatrix m, CoeffRing field) {
  if (!field.is_field()) throw std::invalid_argument("rank needs a field");
  const bool fp = field.kind() == CoeffRing::Kind::PrimeField;
  const mpz_class p = field.characteristic();
  auto reduce = [&](mpq_class& x) {
    if (!fp) return;
    mpz_class num = x.get_num() % p;
    mpz_class den = x.get_den() % p;
    mpz_class inv;
    if (den < 0) den += p;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
    if (num < 0) num += p;
    x = num;
  };
  for (auto& row : m) {
    for (auto& x : row) reduce(x);
  }
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) {
        m[r][j] -= f * m[rank][j];
        reduce(m[r][j]);
      }
    }
    ++rank;
  }
  return rank;
}

LaurentPoly determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(1);
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  const CoeffRing ring = m.front().front().ring();
  PolyMatrix a = m;
  LaurentPoly prev = LaurentPoly::constant(1, ring);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k].is_zero()) ++piv;
      if (piv == n) return LaurentPoly(ring);
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto q = t.exact_divide(prev);
        if (!q) throw std::logic_error("Bareiss division was not exact");
        a[i][j] = std::move(*q);
      }
      a[i][k] = LaurentPoly(ring);
    }
    prev = a[k][k];
  }
  LaurentPoly d = a[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

}  // namespace specht
