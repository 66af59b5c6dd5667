#include <iostream>
#include <set>

#include <gtest/gtest.h>

#include "specht/serialize.hpp"
#include "specht/tableaux.hpp"

namespace {

using namespace specht::tableaux;
using specht::coxeter::Perm;

std::size_t factorial(int n) {
  std::size_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::size_t>(i);
  return r;
}

std::size_t binom(int n, int k) { return k < 0 || k > n ? 0 : factorial(n) / (factorial(k) * factorial(n - k)); }

// Standard tableaux by brute force over all fillings.
std::size_t brute_standard_count(const Partition& l) {
  std::size_t count = 0;
  for (const auto& d : specht::coxeter::all_permutations(l.n())) {
    if (Tableau::from_perm(l, d).is_standard()) ++count;
  }
  return count;
}

TEST(Partition, ParseAndConjugate) {
  EXPECT_EQ(Partition::parse("3, 3,2").parts(), (std::vector<int>{3, 3, 2}));
  EXPECT_THROW(Partition::parse("1,2"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("a"), std::invalid_argument);
  EXPECT_EQ(Partition({5}).conjugate(), Partition({1, 1, 1, 1, 1}));
  EXPECT_EQ(Partition({4, 3, 2}).conjugate(), Partition({3, 3, 2, 1}));
  for (int n = 1; n <= 9; ++n) {
    for (const auto& l : partitions_of(n)) EXPECT_EQ(l.conjugate().conjugate(), l);
  }
}

TEST(Partition, CountsOfPartitions) {
  const std::size_t p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(partitions_of(n).size(), p[n]);
}

TEST(HookLengths, Examples) {
  EXPECT_EQ(hook_lengths(Partition({1})), (std::vector<std::vector<int>>{{1}}));
  EXPECT_EQ(hook_lengths(Partition({3, 2})), (std::vector<std::vector<int>>{{4, 3, 1}, {2, 1}}));
  EXPECT_EQ(hook_lengths(Partition({2, 2})), (std::vector<std::vector<int>>{{3, 2}, {2, 1}}));
}

TEST(HookLengths, CountBoxesToTheRightAndBelow) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& l : partitions_of(n)) {
      const auto h = hook_lengths(l);
      const auto lc = l.conjugate();
      for (int i = 0; i < l.length(); ++i) {
        for (int j = 0; j < l[i]; ++j) {
          int arm = 0, leg = 0;
          for (int jj = j + 1; jj < l[i]; ++jj) ++arm;
          for (int ii = i + 1; ii < l.length(); ++ii) leg += l[ii] > j ? 1 : 0;
          EXPECT_EQ(h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], arm + leg + 1);
          EXPECT_EQ(leg, lc[j] - i - 1);
        }
      }
    }
  }
}

TEST(StandardTableaux, Examples) {
  EXPECT_EQ(standard_tableaux(Partition({5})).size(), 1u);
  EXPECT_EQ(standard_tableaux(Partition({3, 2})).size(), 5u);
  EXPECT_EQ(standard_tableaux(Partition({3, 3, 2})).size(), 42u);
}

TEST(StandardTableaux, HookLengthFormulaAndBruteForce) {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& l : partitions_of(n)) {
      std::size_t prod = 1;
      for (const auto& row : hook_lengths(l)) {
        for (int h : row) prod *= static_cast<std::size_t>(h);
      }
      const auto std_l = standard_tableaux(l);
      EXPECT_EQ(std_l.size(), factorial(n) / prod) << l.to_string();
      EXPECT_EQ(count_standard_tableaux(l), std_l.size());
      const std::set<Tableau> distinct(std_l.begin(), std_l.end());
      EXPECT_EQ(distinct.size(), std_l.size());
      for (const auto& t : std_l) EXPECT_TRUE(t.is_standard());
      if (n <= 7) EXPECT_EQ(brute_standard_count(l), std_l.size());
    }
  }
}

TEST(StandardTableaux, HookOrderPutsNInFirstRowFirst) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k < n; ++k) {
      const auto order = standard_tableaux(Partition::hook(n, k));
      bool seen_other = false;
      for (std::size_t i = 0; i < order.size(); ++i) {
        const bool top = order[i].row_of(n) == 1;
        EXPECT_FALSE(top && seen_other);
        seen_other = seen_other || !top;
        if (i > 0 && (order[i - 1].row_of(n) == 1) == top) {
          EXPECT_LT(order[i - 1].first_column(), order[i].first_column());
        }
      }
    }
  }
}

TEST(DOfTableau, Examples) {
  const Partition l({2, 1});
  EXPECT_TRUE(d_of_tableau(Tableau::initial(l)).is_identity());
  EXPECT_EQ(d_of_tableau(Tableau::terminal(l)), Perm::simple_reflection(2, 3));
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lam : partitions_of(n)) {
      EXPECT_EQ(d_of_tableau(Tableau::terminal(lam)), specht::coxeter::w_lambda(lam));
      for (const auto& t : standard_tableaux(lam)) EXPECT_EQ(Tableau::from_perm(lam, d_of_tableau(t)), t);
    }
  }
}

TEST(Tableau, TransposeSwapsInitialAndTerminal) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& l : partitions_of(n)) {
      EXPECT_EQ(Tableau::initial(l).transpose(), Tableau::terminal(l.conjugate()));
      EXPECT_EQ(Tableau::terminal(l).transpose(), Tableau::initial(l.conjugate()));
    }
  }
}

TEST(Tableau, ConjugateDifferenceIsWLambdaWithLengthsAdding) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& l : partitions_of(n)) {
      const auto w = specht::coxeter::w_lambda(l.conjugate());
      for (const auto& t : standard_tableaux(l)) {
        const auto dt = d_of_tableau(t);
        const auto dtc = d_of_tableau(t.transpose());
        EXPECT_EQ(dtc * dt.inverse(), w) << t.to_string();
        EXPECT_EQ(w.length(), dtc.length() + dt.inverse().length()) << t.to_string();
      }
    }
  }
}

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha(Partition({6})), 0);
  EXPECT_EQ(alpha(Partition({4, 3, 2})), 7);
  EXPECT_EQ(alpha(Partition({1, 1, 1, 1, 1})), 10);
}

TEST(Alpha, AgreesWithConjugateColumnsAndLongestElement) {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& l : partitions_of(n)) {
      const auto lc = l.conjugate();
      int by_columns = 0;
      for (int p : lc.parts()) by_columns += p * (p - 1) / 2;
      EXPECT_EQ(alpha(l), by_columns);
      EXPECT_EQ(alpha(l), specht::coxeter::longest_element(lc.parts()).length());
    }
  }
}

TEST(PairTableaux, Examples) {
  const auto pairs = pair_standard_tableaux(1, 4);
  ASSERT_EQ(pairs.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(pairs[static_cast<std::size_t>(i)].tableau.a, std::vector<int>{i + 1});
  EXPECT_EQ(pairs[3].tableau.to_string(), "(4|123)");
  EXPECT_EQ(pairs[3].length, 3);
}

TEST(PairTableaux, CountAndLengthMatchInversions) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k < n; ++k) {
      const auto pairs = pair_standard_tableaux(k, n);
      EXPECT_EQ(pairs.size(), binom(n, k));
      for (const auto& p : pairs) {
        EXPECT_TRUE(p.tableau.is_standard());
        int count = 0;
        for (int i : p.tableau.a) {
          for (int j : p.tableau.b) count += i > j ? 1 : 0;
        }
        EXPECT_EQ(p.length, count);
        EXPECT_EQ(p.d.length(), count);
        for (int i = 1; i <= k; ++i) EXPECT_EQ(p.d(i), p.tableau.a[static_cast<std::size_t>(i - 1)]);
        for (int i = k + 1; i <= n; ++i) EXPECT_EQ(p.d(i), p.tableau.b[static_cast<std::size_t>(i - k - 1)]);
      }
    }
  }
}

TEST(Precedence, Examples) {
  const auto t = Tableau::terminal(Partition({2, 1}));
  const auto i2 = precedes_and_index(pair_from_subset({2}, 3), t);
  ASSERT_TRUE(i2.has_value());
  EXPECT_EQ(i2->index, 1);
  const auto i1 = precedes_and_index(pair_from_subset({1}, 3), t);
  ASSERT_TRUE(i1.has_value());
  EXPECT_EQ(i1->index, 2);
  EXPECT_FALSE(precedes_and_index(pair_from_subset({3}, 3), t).has_value());
}

TEST(Precedence, EveryHookTableauIsPrecededByKPlusOnePairs) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k < n; ++k) {
      const auto pairs = pair_standard_tableaux(k, n);
      for (const auto& t : standard_tableaux(Partition::hook(n, k))) {
        int count = 0, before_n = 0;
        std::set<int> indices;
        for (const auto& p : pairs) {
          if (const auto pr = precedes_and_index(p.tableau, t)) {
            ++count;
            before_n += pr->before_n ? 1 : 0;
            indices.insert(pr->index);
          }
        }
        EXPECT_EQ(count, k + 1) << t.to_string();
        EXPECT_EQ(static_cast<int>(indices.size()), k + 1);
        EXPECT_EQ(before_n, t.row_of(n) == 1 ? k + 1 : 1);
      }
    }
  }
}

TEST(DistinguishedPairs, Examples) {
  const Partition l({2, 1});
  EXPECT_EQ(a_plus(l).to_string(), "(3|12)");
  const auto t = Tableau::terminal(l);
  EXPECT_EQ(t_star(t).rows(), (std::vector<std::vector<int>>{{3, 1}, {2}}));
  EXPECT_EQ(star_pair(t).to_string(), "(2|13)");
}

TEST(DistinguishedPairs, APlusLengthAndStarPairUniqueness) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k < n; ++k) {
      const auto l = Partition::hook(n, k);
      EXPECT_EQ(pair_length(a_plus(l)), k * (n - k));
      for (const auto& t : standard_tableaux(l)) {
        if (t.row_of(n) != 1) continue;
        const auto ts = t_star(t);
        int matches = 0;
        for (const auto& p : pair_standard_tableaux(k, n)) {
          const auto pr = precedes_and_index(p.tableau, ts);
          if (pr && pr->before_n) {
            ++matches;
            EXPECT_EQ(p.tableau, star_pair(t));
          }
        }
        EXPECT_EQ(matches, 1);
      }
    }
  }
}

TEST(Tableau, JsonRoundTrip) {
  const auto t = Tableau::terminal(Partition({3, 2}));
  const auto j = specht::serialize::to_json(t);
  EXPECT_EQ(j.dump(), "[[1,3,5],[2,4]]");
  EXPECT_EQ(specht::serialize::tableau_from_json(j), t);
}

}  // namespace
