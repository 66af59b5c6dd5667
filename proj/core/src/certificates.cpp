#include "specht/certificates.hpp"

#include <random>
#include <functional>
#include <stdexcept>

#include "specht/gram.hpp"
#include "specht/smith.hpp"

namespace specht::snf {

Certificate divisible_diag_certificate(const PolyMatrix& t) {
  Certificate c;
  const std::size_t m = t.size();
  if (m == 0) {
    c.accepted = true;
    return c;
  }
  const CoeffRing ring = t.front().front().ring();
  c.divisors.ring = ring;
  for (std::size_t i = 0; i < m; ++i) {
    if (t[i].size() != m) throw std::invalid_argument("certificate needs a square matrix");
    for (std::size_t j = 0; j < i; ++j) {
      if (!t[i][j].is_zero()) {
        c.offending = {i, j};
        c.reason = "entry below the diagonal is nonzero";
        return c;
      }
    }
    const LaurentPoly& d = t[i][i];
    if (d.is_zero()) {
      c.offending = {i, i};
      c.reason = "zero diagonal entry";
      return c;
    }
    if (i > 0 && !t[i - 1][i - 1].divides(d)) {
      c.offending = {i, i};
      c.reason = "diagonal entry is not divisible by the previous one";
      return c;
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!t[i][j].is_zero() && !d.divides(t[i][j])) {
        c.offending = {i, j};
        c.reason = "diagonal entry does not divide an entry of its row";
        return c;
      }
    }
    c.divisors.divisors.push_back(qlaurent::canonical(d));
  }
  c.accepted = true;
  return c;
}

namespace {

LaurentPoly product_prefix(const EDList& e, std::size_t k) {
  LaurentPoly p = LaurentPoly::constant(1, e.ring);
  for (std::size_t i = 0; i < k && i < e.divisors.size(); ++i) p *= e.divisors[i];
  return p.is_zero() ? p : qlaurent::canonical(p);
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    f(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

LaurentPoly accumulate_gcd(const LaurentPoly& g, const LaurentPoly& x) {
  if (x.is_zero()) return g;
  if (g.is_zero()) return qlaurent::canonical(x);
  return qlaurent::gcd(g, x);
}

}  // namespace

MinorCheck minor_ideal_check(const PolyMatrix& m, const EDList& e, std::size_t k, const MinorOptions& opts) {
  MinorCheck r;
  if (m.empty() || k == 0) throw std::invalid_argument("minor_ideal_check needs k >= 1 and a nonempty matrix");
  const CoeffRing ring = m.front().front().ring();
  if (!ring.is_field()) throw std::invalid_argument("minor_ideal_check needs field coefficients");
  const std::size_t rows = m.size(), cols = m.front().size();
  if (k > std::min(rows, cols)) throw std::invalid_argument("k exceeds the matrix size");
  r.expected = product_prefix(e, k);
  LaurentPoly g(ring);

  if (binomial(rows, k) * binomial(cols, k) <= static_cast<double>(opts.max_exhaustive_minors)) {
    r.exhaustive = true;
    for_each_subset(rows, k, [&](const std::vector<std::size_t>& rs) {
      for_each_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
        PolyMatrix sub(k, std::vector<LaurentPoly>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rs[i]][cs[j]];
        }
        g = accumulate_gcd(g, determinant(sub));
      });
    });
  } else {
    std::mt19937_64 rng(opts.seed);
    const std::int64_t bound = ring.kind() == CoeffRing::Kind::PrimeField
                                   ? static_cast<std::int64_t>(ring.characteristic()) - 1
                                   : 7;
    std::uniform_int_distribution<std::int64_t> coin(-bound, bound);
    auto random_entry = [&]() {
      // degree <= 1 polynomials give enough variety over small prime fields
      return LaurentPoly::from_terms({{0, coin(rng)}, {1, coin(rng)}}, ring);
    };
    for (int s = 0; s < opts.samples; ++s) {
      PolyMatrix p(k, std::vector<LaurentPoly>(rows)), q(cols, std::vector<LaurentPoly>(k));
      for (auto& row : p) {
        for (auto& x : row) x = random_entry();
      }
      for (auto& row : q) {
        for (auto& x : row) x = random_entry();
      }
      const LaurentPoly det = determinant(matrix_multiply(matrix_multiply(p, m), q));
      if (!det.is_zero() && (r.expected.is_zero() || !r.expected.divides(det))) {
        r.minor_gcd = accumulate_gcd(g, det);
        r.holds = false;
        return r;
      }
      g = accumulate_gcd(g, det);
    }
  }
  r.minor_gcd = g;
  r.holds = (g.is_zero() && r.expected.is_zero()) || (!g.is_zero() && !r.expected.is_zero() && g == r.expected);
  return r;
}

bool determinant_matches(const PolyMatrix& m, const EDList& e) {
  const LaurentPoly det = determinant(m);
  const LaurentPoly prod = product_prefix(e, e.size());
  if (det.is_zero() || prod.is_zero()) return det.is_zero() && prod.is_zero();
  return qlaurent::canonical(det) == prod;
}

DualityCheck conjugate_duality_check(const tableaux::Partition& lambda, const EDList& lambda_eds,
                                     const EDList& conjugate_eds) {
  DualityCheck d;
  d.lambda_eds = lambda_eds;
  d.conjugate_eds = conjugate_eds;
  const std::size_t m = lambda_eds.size();
  if (conjugate_eds.size() != m) {
    d.failing_index = 0;
    return d;
  }
  const CoeffRing q = CoeffRing::rationals();
  const LaurentPoly h = qlaurent::canonical(qlaurent::hook_polynomial(lambda, q));
  for (std::size_t i = 0; i < m; ++i) {
    const LaurentPoly prod = lambda_eds.divisors[i] * conjugate_eds.divisors[m - 1 - i];
    if (prod.is_zero() || !(qlaurent::canonical(prod) == h)) {
      d.failing_index = i;
      return d;
    }
  }
  d.holds = true;
  return d;
}

DualityCheck conjugate_duality_check(const tableaux::Partition& lambda) {
  const CoeffRing q = CoeffRing::rationals();
  const auto a = smith_field_laurent(matrix_to_ring(gram::gram_matrix(lambda).entries, q));
  const auto b = smith_field_laurent(matrix_to_ring(gram::gram_matrix(lambda.conjugate()).entries, q));
  return conjugate_duality_check(lambda, a, b);
}

}  // namespace specht::snf
