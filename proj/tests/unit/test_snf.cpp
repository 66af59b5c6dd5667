#include <random>

#include <gtest/gtest.h>

#include "specht/certificates.hpp"
#include "specht/gram.hpp"
#include "specht/serialize.hpp"
#include "specht/smith.hpp"

namespace {

using namespace specht::snf;
using specht::PolyMatrix;
using specht::qlaurent::cyclotomic;
using specht::tableaux::Partition;

const CoeffRing Z = CoeffRing::integers();
const CoeffRing Q = CoeffRing::rationals();

LaurentPoly q(LaurentPoly::Exponent e = 1, CoeffRing ring = Z) { return LaurentPoly::q_power(e, ring); }
LaurentPoly c(long v, CoeffRing ring = Z) { return LaurentPoly::constant(v, ring); }
LaurentPoly phi(int m, CoeffRing ring = Z) { return cyclotomic(m).to_ring(ring); }

EDList edlist(std::vector<LaurentPoly> d, CoeffRing ring) {
  for (auto& e : d) e = specht::qlaurent::canonical(e.to_ring(ring));
  return EDList{ring, std::move(d)};
}

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// d_1 ... d_k as the gcd of all k x k minors, over a field coefficient ring.
std::vector<LaurentPoly> minor_gcds(const PolyMatrix& m, CoeffRing ring) {
  const PolyMatrix f = specht::matrix_to_ring(m, ring);
  std::vector<LaurentPoly> out;
  for (std::size_t k = 1; k <= f.size(); ++k) {
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> cur;
    combinations(f.size(), k, 0, cur, subsets);
    LaurentPoly g(ring);
    for (const auto& rows : subsets) {
      for (const auto& cols : subsets) {
        PolyMatrix sub(k, std::vector<LaurentPoly>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = f[rows[i]][cols[j]];
        }
        const auto d = specht::determinant(sub);
        g = g.is_zero() && d.is_zero() ? g : specht::qlaurent::gcd(g, d);
      }
    }
    out.push_back(g);
  }
  return out;
}

void expect_matches_minors(const EDList& e, const PolyMatrix& m) {
  const auto gs = minor_gcds(m, e.ring);
  LaurentPoly prod = c(1, e.ring);
  for (std::size_t k = 0; k < gs.size(); ++k) {
    prod *= e.divisors[k];
    EXPECT_TRUE(specht::qlaurent::associates(prod, gs[k]) || (prod.is_zero() && gs[k].is_zero()))
        << "k=" << k + 1 << " product " << prod.to_string() << " minor gcd " << gs[k].to_string();
  }
}

// U D V with U, V products of random elementary operations over Z[q, q^-1].
PolyMatrix scramble(PolyMatrix m, std::mt19937_64& rng) {
  const std::size_t n = m.size();
  auto mult = [&] { return LaurentPoly::monomial(static_cast<long>(rng() % 5) - 2, static_cast<int>(rng() % 3) - 1); };
  for (int step = 0; step < 12; ++step) {
    const std::size_t i = rng() % n, j = (i + 1 + rng() % (n - 1)) % n;
    const auto f = mult();
    if (step % 2 == 0) {
      for (std::size_t col = 0; col < n; ++col) m[i][col] += f * m[j][col];
    } else {
      for (std::size_t row = 0; row < n; ++row) m[row][i] += f * m[row][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = LaurentPoly::monomial(rng() % 2 ? 1 : -1, static_cast<int>(rng() % 3) - 1);
    for (auto& e : m[i]) e *= u;
  }
  return m;
}

TEST(Smith, DiagonalExamples) {
  const PolyMatrix d{{q() - c(1), c(0)}, {c(0), q() + c(1)}};
  EXPECT_EQ(smith_over(d, Q), edlist({c(1), (q() - c(1)) * (q() + c(1))}, Q));
  const auto f2 = CoeffRing::prime_field(2);
  EXPECT_EQ(smith_over(d, f2), edlist({q() + c(1), q() + c(1)}, f2));
  EXPECT_EQ(smith_over(d, Z).divisors, (std::vector<LaurentPoly>{c(2), c(0)}));
}

TEST(Smith, IntegerExamples) {
  const std::vector<std::vector<mpz_class>> m{{2, 4}, {6, 8}};
  EXPECT_EQ(smith_integer(m).divisors, (std::vector<LaurentPoly>{c(2), c(4)}));
  const std::vector<std::vector<mpz_class>> s{{0, 0}, {0, 3}};
  const auto e = smith_integer(s);
  EXPECT_EQ(e.divisors, (std::vector<LaurentPoly>{c(3), c(0)}));
  EXPECT_EQ(e.rank(), 1u);
}

TEST(Smith, GramExample) {
  const auto g = specht::gram::gram_matrix(Partition({2, 1})).entries;
  SmithSession s(g);
  EXPECT_EQ(s.over_q(), edlist({c(1), phi(3)}, Q));
  EXPECT_EQ(s.over(CoeffRing::prime_field(3)), edlist({c(1), phi(1) * phi(1)}, CoeffRing::prime_field(3)));
  EXPECT_EQ(s.over(CoeffRing::prime_field(2)), edlist({c(1), phi(3)}, CoeffRing::prime_field(2)));
  EXPECT_EQ(s.over_z().divisors, (std::vector<LaurentPoly>{c(1), c(3)}));
  ASSERT_TRUE(s.integer_determinant().has_value());
  EXPECT_TRUE(specht::qlaurent::associates(*s.integer_determinant(), phi(3)));
}

TEST(Smith, IdempotentOnDiagonalOfDivisors) {
  const auto e = edlist({c(1), phi(2), phi(2) * phi(3), phi(2) * phi(2) * phi(3) * phi(4)}, Q);
  PolyMatrix d(e.size(), std::vector<LaurentPoly>(e.size(), LaurentPoly(Z)));
  for (std::size_t i = 0; i < e.size(); ++i) d[i][i] = e.divisors[i].to_ring(Z);
  EXPECT_EQ(smith_over(d, Q), e);
}

TEST(Smith, InvariantUnderUnimodularScrambling) {
  std::mt19937_64 rng(53);
  const std::vector<CoeffRing> fields{Q, CoeffRing::prime_field(2), CoeffRing::prime_field(3)};
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<LaurentPoly> diag;
    LaurentPoly acc = c(1);
    for (int i = 0; i < 5; ++i) {
      if (rng() % 2) acc *= phi(1 + static_cast<int>(rng() % 6));
      diag.push_back(acc * c(trial % 3 == 0 ? 1 : 1 + static_cast<long>(rng() % 2)));
    }
    PolyMatrix d(5, std::vector<LaurentPoly>(5, LaurentPoly(Z)));
    for (std::size_t i = 0; i < 5; ++i) d[i][i] = diag[i];
    const auto m = scramble(d, rng);
    SmithSession s(m);
    for (const auto& ring : fields) {
      const auto want = smith_field_laurent(specht::matrix_to_ring(d, ring));
      const auto got = s.over(ring);
      EXPECT_EQ(got, want) << ring.to_string();
      EXPECT_EQ(smith_field_laurent(specht::matrix_to_ring(m, ring)), want) << ring.to_string();
      expect_matches_minors(got, m);
    }
  }
}

TEST(Smith, AgreesWithMinorGcdsOnRandomMatrices) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    PolyMatrix m(4, std::vector<LaurentPoly>(4, LaurentPoly(Z)));
    for (auto& row : m) {
      for (auto& e : row) {
        e = LaurentPoly::from_terms({{0, static_cast<long>(rng() % 5) - 2}, {1, static_cast<long>(rng() % 3) - 1}});
      }
    }
    for (const auto& ring : {Q, CoeffRing::prime_field(2), CoeffRing::prime_field(5)}) {
      const auto e = smith_over(m, ring);
      EXPECT_TRUE(e.chain_holds());
      expect_matches_minors(e, m);
    }
  }
}

TEST(EDList, SameUpToUnits) {
  const auto a = edlist({c(1), phi(2)}, Q);
  EDList b{Q, {c(1, Q), phi(2, Q) * q(3, Q) * c(-5, Q)}};
  EXPECT_TRUE(same_up_to_units(a, b));
  EXPECT_FALSE(same_up_to_units(a, edlist({c(1), phi(3)}, Q)));
  EXPECT_FALSE(same_up_to_units(edlist({c(1)}, CoeffRing::prime_field(2)), edlist({c(1)}, CoeffRing::prime_field(3))));
  EXPECT_TRUE(same_up_to_units(EDList{Z, {c(1), c(2)}}, EDList{Q, {c(1, Q), c(2, Q)}}));
}

TEST(EDList, NormalizeDiagonal) {
  const auto e = normalize_diagonal({phi(2, Q) * phi(3, Q), phi(2, Q), phi(3, Q)}, Q);
  EXPECT_EQ(e, edlist({c(1), phi(2) * phi(3), phi(2) * phi(3)}, Q));
  EXPECT_TRUE(e.chain_holds());
}

TEST(JumpNotation, FormatRenderExpand) {
  const auto e = edlist({c(1), c(1), phi(2), phi(2) * phi(3)}, Q);
  const auto j = jump_format(e);
  ASSERT_EQ(j.steps.size(), 3u);
  EXPECT_EQ(j.steps[0].multiplicity, 2u);
  EXPECT_EQ(j.steps[1].factor, phi(2, Q));
  EXPECT_EQ(render(j, 20), "-[1]-> 2 -[Φ2]-> 1 -[Φ3]-> 1");
  EXPECT_EQ(expand(j), e);
  const auto parsed = parse_rendered(render(j, 20));
  EXPECT_EQ(parsed, (std::vector<std::pair<std::string, std::size_t>>{{"1", 2}, {"Φ2", 1}, {"Φ3", 1}}));
  EXPECT_THROW(jump_format(EDList{Q, {phi(2, Q), phi(3, Q)}}), std::domain_error);
  EXPECT_THROW(jump_format(EDList{Q, {c(1, Q), LaurentPoly(Q)}}), std::invalid_argument);
}

TEST(JumpNotation, IntegerLabels) {
  EXPECT_EQ(integer_factor_string(1), "1");
  EXPECT_EQ(integer_factor_string(360), "2^3·3^2·5");
  const EDList z{Z, {c(1), c(2), c(2), c(12)}};
  EXPECT_EQ(render(jump_format(z), 20), "-[1]-> 1 -[2]-> 2 -[2·3]-> 1");
}

TEST(JumpNotation, ExpandInvertsFormatOnRandomChains) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<LaurentPoly> d;
    LaurentPoly acc = c(1);
    for (int i = 0, n = 1 + static_cast<int>(rng() % 7); i < n; ++i) {
      if (rng() % 3 == 0) acc *= phi(1 + static_cast<int>(rng() % 9));
      d.push_back(acc);
    }
    const auto e = edlist(d, Q);
    EXPECT_EQ(expand(jump_format(e)), e);
    const auto parsed = parse_rendered(render(jump_format(e), 20));
    std::size_t total = 0;
    for (const auto& [label, mult] : parsed) total += mult;
    EXPECT_EQ(total, e.size());
  }
}

TEST(Certificate, AcceptsAndRefuses) {
  const PolyMatrix good{{c(1), q()}, {c(0), phi(2)}};
  const auto ok = divisible_diag_certificate(good);
  EXPECT_TRUE(ok.accepted);
  EXPECT_TRUE(same_up_to_units(ok.divisors, edlist({c(1), phi(2)}, Q)));

  const PolyMatrix bad{{phi(2), c(2)}, {c(0), phi(2)}};
  const auto no = divisible_diag_certificate(bad);
  EXPECT_FALSE(no.accepted);
  ASSERT_TRUE(no.offending.has_value());
  EXPECT_EQ(*no.offending, (std::pair<std::size_t, std::size_t>{0, 1}));

  const PolyMatrix lower{{c(1), c(0)}, {q(), c(1)}};
  EXPECT_FALSE(divisible_diag_certificate(lower).accepted);
}

TEST(Certificate, AcceptedDiagonalIsTheSmithForm) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 4;
    std::vector<LaurentPoly> d;
    LaurentPoly acc = c(1);
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 2) acc *= phi(1 + static_cast<int>(rng() % 5));
      d.push_back(acc);
    }
    PolyMatrix t(n, std::vector<LaurentPoly>(n, LaurentPoly(Z)));
    for (std::size_t i = 0; i < n; ++i) {
      t[i][i] = d[i];
      for (std::size_t j = i + 1; j < n; ++j) t[i][j] = d[i] * LaurentPoly::monomial(static_cast<long>(rng() % 5) - 2, 0);
    }
    const auto cert = divisible_diag_certificate(t);
    ASSERT_TRUE(cert.accepted);
    EXPECT_TRUE(same_up_to_units(cert.divisors, smith_over(t, Q)));
  }
}

TEST(MinorIdeal, GramExample) {
  const auto g = specht::gram::gram_matrix(Partition({3, 1})).entries;
  const auto gq = specht::matrix_to_ring(g, Q);
  const auto e = smith_over(g, Q);
  for (std::size_t k = 1; k <= e.size(); ++k) {
    const auto r = minor_ideal_check(gq, e, k);
    EXPECT_TRUE(r.holds) << "k=" << k;
    EXPECT_TRUE(r.exhaustive);
  }
  EXPECT_TRUE(determinant_matches(gq, e));
  auto wrong = e;
  wrong.divisors.back() *= phi(5, Q);
  EXPECT_FALSE(minor_ideal_check(gq, wrong, e.size()).holds);
  EXPECT_FALSE(determinant_matches(gq, wrong));
}

TEST(MinorIdeal, SampledModeOnLargerMatrix) {
  const auto g = specht::gram::gram_matrix(Partition({4, 2})).entries;
  const auto gq = specht::matrix_to_ring(g, Q);
  const auto e = smith_over(g, Q);
  MinorOptions opts;
  opts.max_exhaustive_minors = 10;
  const auto r = minor_ideal_check(gq, e, 3, opts);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_TRUE(r.holds);
}

TEST(Duality, Examples) {
  for (const auto& l : {Partition({2, 1}), Partition({3, 1}), Partition({2, 2}), Partition({3, 2}), Partition({3, 1, 1})}) {
    const auto r = conjugate_duality_check(l);
    EXPECT_TRUE(r.holds) << l.to_string();
    EXPECT_EQ(r.lambda_eds.size(), r.conjugate_eds.size());
  }
  const auto a = edlist({c(1), phi(3)}, Q);
  const auto r = conjugate_duality_check(Partition({2, 1}), a, edlist({c(1), phi(2)}, Q));
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.failing_index.has_value());
}

TEST(EDList, JsonRoundTrip) {
  const auto e = edlist({c(1), phi(2) * phi(4)}, Q);
  EXPECT_EQ(specht::serialize::edlist_from_json(specht::serialize::to_json(e)), e);
  const EDList z{Z, {c(1), c(6)}};
  EXPECT_EQ(specht::serialize::edlist_from_json(specht::serialize::to_json(z)), z);
}

}  // namespace
