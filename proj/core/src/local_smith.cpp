#include "local_smith.hpp"

#include <algorithm>
#include <stdexcept>

#include "specht/fp_poly.hpp"

namespace specht::snf::detail {

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t PrimeField::inv(std::uint32_t a) const { return fp_inverse(a, p_); }

std::uint32_t PrimeField::reduce(const mpz_class& v) const {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p_));
}

Dense PrimeField::multiply(const Dense& a, const Dense& b) const {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  // p < 2^31, so up to four products fit before a reduction is needed
  const std::uint64_t limit = ~std::uint64_t{0} - static_cast<std::uint64_t>(p_ - 1) * (p_ - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t& x = acc[i + j];
      if (x > limit) x %= p_;
      x += static_cast<std::uint64_t>(a[i]) * b[j];
    }
  }
  Dense r(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) r[k] = static_cast<std::uint32_t>(acc[k] % p_);
  trim(r);
  return r;
}

Dense PrimeField::subtract(Dense a, const Dense& b) const {
  if (a.size() < b.size()) a.resize(b.size(), 0U);
  for (std::size_t k = 0; k < b.size(); ++k) a[k] = sub(a[k], b[k]);
  trim(a);
  return a;
}

std::pair<Dense, Dense> PrimeField::divmod(Dense a, const Dense& b) const {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, std::move(a)};
  const std::size_t db = b.size() - 1;
  Dense q(a.size() - db, 0U);
  const std::uint32_t lead = inv(b.back());
  for (std::size_t i = a.size(); i-- > db;) {
    if (!a[i]) continue;
    const std::uint32_t c = mul(a[i], lead);
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = sub(a[i - db + j], mul(c, b[j]));
  }
  a.resize(db);
  trim(a);
  trim(q);
  return {std::move(q), std::move(a)};
}

Dense PrimeField::mod(Dense a, const Dense& b) const {
  trim(a);
  if (a.size() < b.size()) return a;
  return divmod(std::move(a), b).second;
}

Dense PrimeField::monic(Dense a) const {
  if (a.empty()) return a;
  const std::uint32_t s = inv(a.back());
  for (auto& c : a) c = mul(c, s);
  return a;
}

Dense PrimeField::gcd(Dense a, Dense b) const {
  while (!b.empty()) {
    Dense r = mod(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

std::optional<Dense> PrimeField::inverse_mod(const Dense& a, const Dense& m) const {
  Dense r0 = m, r1 = mod(a, m), s0, s1 = {1U};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Dense s2 = subtract(s0, multiply(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) return std::nullopt;
  const std::uint32_t c = inv(r0[0]);
  for (auto& x : s0) x = mul(x, c);
  return mod(std::move(s0), m);
}

Dense PrimeField::power(const Dense& g, int k) const {
  Dense r = {1U};
  for (int i = 0; i < k; ++i) r = multiply(r, g);
  return r;
}

int PrimeField::valuation(const Dense& a, const Dense& g, int cap) const {
  if (a.empty()) return cap;
  int k = 0;
  Dense y = a;
  while (k < cap) {
    auto [q, r] = divmod(y, g);
    if (!r.empty()) break;
    y = std::move(q);
    ++k;
  }
  return k;
}

std::optional<IntegerPolyMatrix> to_integer_poly(const PolyMatrix& m) {
  const std::size_t n = m.size();
  IntegerPolyMatrix out;
  out.c.assign(n, std::vector<std::vector<mpz_class>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) return std::nullopt;
    bool any = false;
    qlaurent::LaurentPoly::Exponent low = 0, high = 0;
    for (const auto& e : m[i]) {
      if (e.is_zero()) continue;
      if (!(e.ring() == qlaurent::CoeffRing::integers())) return std::nullopt;
      low = any ? std::min(low, e.low()) : e.low();
      high = any ? std::max(high, e.high()) : e.high();
      any = true;
    }
    if (!any) return std::nullopt;
    out.shift_total += low;
    out.degree_bound += static_cast<std::size_t>(high - low);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = m[i][j];
      if (e.is_zero()) continue;
      auto& c = out.c[i][j];
      c.assign(static_cast<std::size_t>(e.high() - low) + 1, 0);
      const auto& num = e.numerators();
      for (std::size_t k = 0; k < num.size(); ++k) c[static_cast<std::size_t>(e.low() - low) + k] = num[k];
    }
  }
  return out;
}

std::vector<std::vector<Dense>> reduce(const IntegerPolyMatrix& m, const PrimeField& f) {
  std::vector<std::vector<Dense>> a(m.c.size());
  for (std::size_t i = 0; i < m.c.size(); ++i) {
    a[i].resize(m.c[i].size());
    for (std::size_t j = 0; j < m.c[i].size(); ++j) {
      Dense d(m.c[i][j].size());
      for (std::size_t k = 0; k < d.size(); ++k) d[k] = f.reduce(m.c[i][j][k]);
      trim(d);
      a[i][j] = std::move(d);
    }
  }
  return a;
}

namespace {

std::uint32_t scalar_determinant(std::vector<std::vector<std::uint32_t>> a, const PrimeField& f) {
  const std::size_t n = a.size();
  std::uint32_t det = 1;
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t piv = t;
    while (piv < n && a[piv][t] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != t) {
      std::swap(a[piv], a[t]);
      det = f.sub(0, det);
    }
    det = f.mul(det, a[t][t]);
    const std::uint32_t inv = f.inv(a[t][t]);
    for (std::size_t i = t + 1; i < n; ++i) {
      if (a[i][t] == 0) continue;
      const std::uint32_t m = f.mul(a[i][t], inv);
      for (std::size_t j = t + 1; j < n; ++j) a[i][j] = f.sub(a[i][j], f.mul(m, a[t][j]));
    }
  }
  return det;
}

}  // namespace

Dense determinant_mod(const IntegerPolyMatrix& m, const PrimeField& f) {
  const std::size_t n = m.c.size();
  const std::size_t points = m.degree_bound + 1;
  if (points >= f.p()) throw std::invalid_argument("prime too small for determinant interpolation");
  const auto a = reduce(m, f);
  std::vector<std::uint32_t> values(points);
  std::vector<std::vector<std::uint32_t>> s(n, std::vector<std::uint32_t>(n));
  for (std::size_t x = 0; x < points; ++x) {
    const auto xv = static_cast<std::uint32_t>(x);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::uint32_t v = 0;
        for (std::size_t k = a[i][j].size(); k-- > 0;) v = f.add(f.mul(v, xv), a[i][j][k]);
        s[i][j] = v;
      }
    }
    values[x] = scalar_determinant(s, f);
  }
  // Newton divided differences on the nodes 0, 1, ..., points - 1
  std::vector<std::uint32_t> inverse(points + 1, 1);
  for (std::size_t k = 2; k <= points; ++k) {
    inverse[k] = f.sub(0, f.mul(static_cast<std::uint32_t>(f.p() / k), inverse[f.p() % k]));
  }
  for (std::size_t level = 1; level < points; ++level) {
    for (std::size_t i = points - 1; i >= level; --i) values[i] = f.mul(f.sub(values[i], values[i - 1]), inverse[level]);
  }
  Dense poly = {values[points - 1]};
  for (std::size_t k = points - 1; k-- > 0;) {
    Dense next(poly.size() + 1, 0U);
    const auto node = static_cast<std::uint32_t>(k);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] = f.add(next[d + 1], poly[d]);
      next[d] = f.sub(next[d], f.mul(node, poly[d]));
    }
    next[0] = f.add(next[0], values[k]);
    poly = std::move(next);
  }
  trim(poly);
  return poly;
}

mpz_class determinant_at(const IntegerPolyMatrix& m, long x) {
  const std::size_t n = m.c.size();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  const mpz_class xv = x;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class v = 0;
      for (std::size_t k = m.c[i][j].size(); k-- > 0;) v = v * xv + m.c[i][j][k];
      a[i][j] = v;
    }
  }
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t piv = t;
    while (piv < n && a[piv][t] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != t) {
      std::swap(a[piv], a[t]);
      sign = -sign;
    }
    for (std::size_t i = t + 1; i < n; ++i) {
      for (std::size_t j = t + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[t][t] - a[i][t] * a[t][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[t][t];
  }
  return sign * a[n - 1][n - 1];
}

LocalOutcome local_valuations(std::vector<std::vector<Dense>> a, const Dense& g, int cap, const PrimeField& f) {
  const std::size_t n = a.size();
  const Dense modulus = f.power(g, cap);
  std::vector<Dense> powers(static_cast<std::size_t>(cap) + 1);
  powers[0] = {1U};
  for (int k = 1; k <= cap; ++k) powers[static_cast<std::size_t>(k)] = f.multiply(powers[static_cast<std::size_t>(k) - 1], g);
  for (auto& row : a) {
    for (auto& e : row) e = f.mod(std::move(e), modulus);
  }
  LocalOutcome out;
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t bi = n, bj = n;
    int best = cap;
    for (std::size_t i = t; i < n && best > 0; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (a[i][j].empty()) continue;
        const int v = f.valuation(a[i][j], g, best);
        if (bi == n || v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    }
    if (bi == n || best == cap) {
      out.valuations.resize(n, cap);
      break;
    }
    std::swap(a[t], a[bi]);
    if (bj != t) {
      for (auto& row : a) std::swap(row[t], row[bj]);
    }
    const Dense& gv = powers[static_cast<std::size_t>(best)];
    const Dense unit = f.divmod(a[t][t], gv).first;
    const Dense common = f.gcd(f.mod(unit, g), g);
    if (common.size() > 1) {
      out.split = common;
      return out;
    }
    const Dense inverse = *f.inverse_mod(unit, modulus);
    for (std::size_t i = t + 1; i < n; ++i) {
      if (a[i][t].empty()) continue;
      const Dense m = f.mod(f.multiply(f.divmod(a[i][t], gv).first, inverse), modulus);
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j].empty()) continue;
        a[i][j] = f.mod(f.subtract(std::move(a[i][j]), f.multiply(m, a[t][j])), modulus);
      }
      a[i][t].clear();
    }
    out.valuations.push_back(best);
  }
  return out;
}

}  // namespace specht::snf::detail
