#include <iostream>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "specht/hecke.hpp"
#include "specht/serialize.hpp"

namespace {

using namespace specht::hecke;
using specht::coxeter::Word;
using specht::tableaux::Partition;

LaurentPoly q(LaurentPoly::Exponent e = 1) { return LaurentPoly::q_power(e); }
LaurentPoly c(long v) { return LaurentPoly::constant(v); }
HeckeElt T(int i, int n) { return HeckeElt::generator(i, n); }

std::vector<Partition> partitions_up_to(int n_max) {
  std::vector<Partition> out;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& l : specht::tableaux::partitions_of(n)) out.push_back(l);
  }
  return out;
}

// Reduced words by random descents, an independent source of reduced expressions.
Word random_reduced_word(Perm w, std::mt19937_64& rng) {
  Word rev;
  while (!w.is_identity()) {
    std::vector<int> descents;
    for (int i = 1; i < w.degree(); ++i) {
      if (w.has_right_descent(i)) descents.push_back(i);
    }
    const int i = descents[rng() % descents.size()];
    rev.push_back(i);
    w = w.times_simple(i);
  }
  return Word(rev.rbegin(), rev.rend());
}

TEST(Multiply, Examples) {
  const int n = 3;
  EXPECT_EQ(T(1, n) * T(1, n), (q() - c(1)) * T(1, n) + q() * HeckeElt::one(n));
  EXPECT_EQ(T(1, n) * T(2, n), HeckeElt::basis(Perm::from_word({1, 2}, n)));
  for (const auto& l : partitions_up_to(4)) {
    const auto x = x_mu(l.parts());
    for (const auto& w : specht::coxeter::young_subgroup(l.parts())) {
      EXPECT_EQ(HeckeElt::basis(w) * x, q(w.length()) * x);
      EXPECT_EQ(x * HeckeElt::basis(w), q(w.length()) * x);
    }
  }
  EXPECT_THROW(T(1, 3) * T(1, 4), std::invalid_argument);
}

TEST(Multiply, BraidAndQuadraticRelations) {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      EXPECT_EQ(T(i, n) * T(i, n), (q() - c(1)) * T(i, n) + q() * HeckeElt::one(n));
      for (int j = i + 1; j < n; ++j) {
        if (j == i + 1) {
          EXPECT_EQ(T(i, n) * T(j, n) * T(i, n), T(j, n) * T(i, n) * T(j, n));
        } else {
          EXPECT_EQ(T(i, n) * T(j, n), T(j, n) * T(i, n));
        }
      }
    }
  }
}

TEST(Multiply, BasisElementIndependentOfReducedWord) {
  std::mt19937_64 rng(17);
  for (int n = 3; n <= 6; ++n) {
    const auto all = specht::coxeter::all_permutations(n);
    for (int trial = 0; trial < 50; ++trial) {
      const auto& w = all[rng() % all.size()];
      const auto a = random_reduced_word(w, rng), b = random_reduced_word(w, rng);
      EXPECT_EQ(HeckeElt::word(a, n), HeckeElt::word(b, n));
      EXPECT_EQ(HeckeElt::word(a, n), HeckeElt::basis(w));
    }
  }
}

TEST(Multiply, AssociativeOnRandomElements) {
  std::mt19937_64 rng(23);
  const int n = 4;
  const auto all = specht::coxeter::all_permutations(n);
  auto rand_elt = [&] {
    HeckeElt h(n);
    for (int i = 0; i < 3; ++i) {
      h.add_term(all[rng() % all.size()], LaurentPoly::monomial(static_cast<long>(rng() % 5) - 2, static_cast<int>(rng() % 3) - 1));
    }
    return h;
  };
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = rand_elt(), b = rand_elt(), d = rand_elt();
    EXPECT_EQ((a * b) * d, a * (b * d));
  }
}

TEST(Star, Examples) {
  const int n = 3;
  EXPECT_EQ(star(T(1, n) * T(2, n)), T(2, n) * T(1, n));
  for (const auto& l : partitions_up_to(5)) {
    const auto y = y_mu(l.conjugate().parts());
    EXPECT_EQ(star(y), y);
    EXPECT_EQ(star(star(x_mu(l.parts()) * y)), x_mu(l.parts()) * y);
  }
}

TEST(Hash, Examples) {
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i < n; ++i) EXPECT_EQ(hash(T(i, n)), (q() - c(1)) * HeckeElt::one(n) - T(i, n));
  }
  for (const auto& l : partitions_up_to(5)) {
    EXPECT_EQ(hash(x_mu(l.parts())), q(specht::tableaux::alpha(l.conjugate())) * y_mu(l.parts())) << l.to_string();
  }
}

TEST(Hash, AutomorphismOfOrderTwoCommutingWithStar) {
  std::mt19937_64 rng(29);
  const int n = 4;
  const auto all = specht::coxeter::all_permutations(n);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = HeckeElt::basis(all[rng() % all.size()]) + q(-1) * HeckeElt::basis(all[rng() % all.size()]);
    const auto b = HeckeElt::basis(all[rng() % all.size()]);
    EXPECT_EQ(hash(hash(a)), a);
    EXPECT_EQ(hash(a * b), hash(a) * hash(b));
    EXPECT_EQ(star(a * b), star(b) * star(a));
    EXPECT_EQ(hash(star(a)), star(hash(a)));
  }
}

TEST(Inverse, Examples) {
  const int n = 3;
  EXPECT_EQ(invert_basis_element(Perm::simple_reflection(1, n)), q(-1) * T(1, n) + (q(-1) - c(1)) * HeckeElt::one(n));
  for (const auto& w : specht::coxeter::all_permutations(4)) {
    EXPECT_EQ(invert_basis_element(w) * HeckeElt::basis(w), HeckeElt::one(4));
    EXPECT_EQ(HeckeElt::basis(w) * invert_basis_element(w), HeckeElt::one(4));
  }
  for (const auto& l : partitions_up_to(5)) {
    const auto wl = specht::coxeter::w_lambda(l);
    EXPECT_EQ(specht::coxeter::w_lambda(l.conjugate()), wl.inverse());
    EXPECT_EQ(invert_basis_element(wl).coeff(wl.inverse()), q(-wl.length())) << l.to_string();
  }
}

TEST(StructuralElements, Examples) {
  const int n = 2;
  EXPECT_EQ(x_mu({2}), HeckeElt::one(n) + T(1, n));
  EXPECT_EQ(y_mu({2}), HeckeElt::one(n) - q(-1) * T(1, n));
  for (int m = 1; m <= 5; ++m) EXPECT_EQ(z_lambda(Partition({m})), x_mu({m}));
  EXPECT_THROW(x_mu({2, 1}) * x_mu({2, 2}), std::invalid_argument);
}

TEST(StructuralElements, SignCharacterOfY) {
  for (const auto& l : partitions_up_to(5)) {
    const auto y = y_mu(l.parts());
    for (const auto& w : specht::coxeter::young_subgroup(l.parts())) {
      const auto sign = c(w.length() % 2 == 0 ? 1 : -1);
      EXPECT_EQ(HeckeElt::basis(w) * y, sign * y);
      EXPECT_EQ(y * HeckeElt::basis(w), sign * y);
    }
  }
}

TEST(StructuralElements, HookFactorizations) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      // y_{(k+1,1^{n-k-1})} = y_{(k,1^{n-k})} y'_{k+1}
      std::vector<int> big{k + 1}, small{k};
      big.insert(big.end(), static_cast<std::size_t>(n - k - 1), 1);
      small.insert(small.end(), static_cast<std::size_t>(n - k), 1);
      EXPECT_EQ(y_mu(big), y_mu(small) * y_prime(k, n)) << "n=" << n << " k=" << k;
      // x_{(n-k,1^k)} = x_{(1,n-k-1,1^k)} x_{n-k}
      std::vector<int> hook{n - k}, split{1, n - k - 1};
      hook.insert(hook.end(), static_cast<std::size_t>(k), 1);
      split.insert(split.end(), static_cast<std::size_t>(k), 1);
      if (n - k - 1 == 0) split = std::vector<int>(static_cast<std::size_t>(n), 1);
      EXPECT_EQ(x_mu(hook), x_mu(split) * x_tail(k, n)) << "n=" << n << " k=" << k;
    }
  }
}

TEST(StructuralElements, VanishingOutsideDoubleCoset) {
  for (const auto& l : partitions_up_to(4)) {
    const auto lc = l.conjugate();
    const auto x = x_mu(l.parts());
    const auto y = y_mu(lc.parts());
    const auto z = z_lambda(l);
    const auto wl = specht::coxeter::w_lambda(l);
    std::set<Perm> coset;
    for (const auto& u : specht::coxeter::young_subgroup(l.parts())) {
      for (const auto& v : specht::coxeter::young_subgroup(lc.parts())) coset.insert(u * wl * v);
    }
    for (const auto& w : specht::coxeter::all_permutations(l.n())) {
      const auto h = x * HeckeElt::basis(w) * y;
      if (!coset.count(w)) {
        EXPECT_TRUE(h.is_zero()) << l.to_string() << " w=" << w.to_string();
        continue;
      }
      const auto& [w0, c0] = *z.terms().begin();
      const auto ratio = h.coeff(w0).exact_divide(c0);
      ASSERT_TRUE(ratio.has_value());
      EXPECT_TRUE(ratio->is_unit());
      EXPECT_EQ(*ratio * z, h);
    }
  }
}

TEST(StructuralElements, SandwichScalarIsUnitTimesHookPolynomial) {
  for (const auto& l : partitions_up_to(5)) {
    const auto z = z_lambda(l);
    const auto lhs = z * invert_basis_element(specht::coxeter::w_lambda(l)) * z;
    const auto& [w0, c0] = *z.terms().begin();
    const auto ratio = lhs.coeff(w0).exact_divide(c0);
    ASSERT_TRUE(ratio.has_value()) << l.to_string();
    EXPECT_EQ(*ratio * z, lhs);
    const auto unit = ratio->exact_divide(specht::qlaurent::hook_polynomial(l));
    ASSERT_TRUE(unit.has_value()) << l.to_string();
    EXPECT_TRUE(unit->is_unit());
    std::cout << "[ info ] " << l.to_string() << ": unit " << unit->to_string() << "\n";
  }
}

TEST(StructuralElements, SandwichUnitIsQToMinusAlpha) {
  for (const auto& l : partitions_up_to(5)) {
    const auto z = z_lambda(l);
    const auto lhs = z * invert_basis_element(specht::coxeter::w_lambda(l)) * z;
    EXPECT_EQ(lhs, q(-specht::tableaux::alpha(l)) * specht::qlaurent::hook_polynomial(l) * z) << l.to_string();
  }
}

TEST(HeckeElt, JsonRoundTrip) {
  const auto h = y_mu({2, 1}) + q(3) * T(2, 3);
  EXPECT_EQ(specht::serialize::hecke_from_json(specht::serialize::to_json(h)), h);
}

}  // namespace
