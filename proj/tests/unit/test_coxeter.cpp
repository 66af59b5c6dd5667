#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "specht/coxeter.hpp"
#include "specht/tableaux.hpp"

namespace {

using namespace specht::coxeter;
using specht::tableaux::Partition;

int brute_length(const Perm& w) {
  int inv = 0;
  for (int i = 1; i <= w.degree(); ++i) {
    for (int j = i + 1; j <= w.degree(); ++j) inv += w(i) > w(j) ? 1 : 0;
  }
  return inv;
}

Perm r(int i, int n) { return Perm::simple_reflection(i, n); }

TEST(Perm, CompositionAppliesLeftFactorFirst) {
  const auto u = Perm::from_one_line({2, 1, 3});
  const auto v = Perm::from_one_line({1, 3, 2});
  for (int i = 1; i <= 3; ++i) EXPECT_EQ((u * v)(i), v(u(i)));
  EXPECT_EQ(r(2, 3) * r(1, 3), Perm::from_one_line({2, 3, 1}));
  EXPECT_THROW(Perm::from_one_line({1, 1, 2}), std::invalid_argument);
}

TEST(Perm, GroupAxioms) {
  const auto all = all_permutations(4);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const auto& c = all[rng() % all.size()];
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
  }
}

TEST(LengthAndReducedWord, Examples) {
  const auto id = length_and_reduced_word(Perm::identity(4));
  EXPECT_EQ(id.length, 0);
  EXPECT_TRUE(id.word.empty());
  const auto w0 = length_and_reduced_word(Perm::from_one_line({3, 2, 1}));
  EXPECT_EQ(w0.length, 3);
  EXPECT_TRUE(w0.word == (Word{1, 2, 1}) || w0.word == (Word{2, 1, 2}));
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; a + b <= 6; ++b) EXPECT_EQ(w_ab(a, b, 6).length(), a * b);
  }
}

TEST(LengthAndReducedWord, WordMultipliesBackWithInversionCount) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      const auto lw = length_and_reduced_word(w);
      EXPECT_EQ(lw.length, brute_length(w));
      EXPECT_EQ(static_cast<int>(lw.word.size()), lw.length);
      EXPECT_EQ(Perm::from_word(lw.word, n), w);
    }
  }
}

TEST(DistinguishedReps, Examples) {
  EXPECT_EQ(distinguished_reps({4}), std::vector<Perm>{Perm::identity(4)});
  const auto d21 = distinguished_reps({2, 1});
  const std::set<Perm> got(d21.begin(), d21.end());
  const std::set<Perm> want{Perm::identity(3), r(2, 3), r(2, 3) * r(1, 3)};
  EXPECT_EQ(got, want);
  EXPECT_EQ(distinguished_reps({2, 2}).size(), 6u);
  EXPECT_EQ(distinguished_reps({}), std::vector<Perm>{Perm::identity(0)});
}

TEST(DistinguishedReps, MinimalAndLengthsAdd) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& l : specht::tableaux::partitions_of(n)) {
      for (const Composition& mu : {l.parts(), Composition(l.parts().rbegin(), l.parts().rend())}) {
        const auto reps = distinguished_reps(mu);
        const auto sub = young_subgroup(mu);
        std::size_t fact = 1, denom = 1;
        for (int i = 2; i <= n; ++i) fact *= static_cast<std::size_t>(i);
        for (int m : mu) {
          for (int i = 2; i <= m; ++i) denom *= static_cast<std::size_t>(i);
        }
        EXPECT_EQ(reps.size(), fact / denom);
        EXPECT_TRUE(std::is_sorted(reps.begin(), reps.end()));
        std::set<Perm> cosets_cover;
        for (const auto& d : reps) {
          for (const auto& w : sub) {
            EXPECT_EQ((w * d).length(), w.length() + d.length());
            cosets_cover.insert(w * d);
          }
        }
        EXPECT_EQ(cosets_cover.size(), fact);
      }
    }
  }
}

TEST(WAB, Examples) {
  EXPECT_TRUE(w_ab(3, 0, 5).is_identity());
  EXPECT_TRUE(w_ab(0, 2, 5).is_identity());
  EXPECT_EQ(w_ab(2, 1, 3), Perm::from_one_line({2, 3, 1}));
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; a + b <= 7; ++b) EXPECT_EQ(w_ab(b, a, 7), w_ab(a, b, 7).inverse());
  }
  EXPECT_THROW(w_ab(3, 3, 5), std::invalid_argument);
}

TEST(WAB, TwoLineForm) {
  const int a = 3, b = 2, n = 6;
  const auto w = w_ab(a, b, n);
  for (int i = 1; i <= a; ++i) EXPECT_EQ(w(i), b + i);
  for (int i = a + 1; i <= a + b; ++i) EXPECT_EQ(w(i), i - a);
  for (int i = a + b + 1; i <= n; ++i) EXPECT_EQ(w(i), i);
}

TEST(WAB, RecursionWithLengthsAdding) {
  for (int a = 1; a <= 7; ++a) {
    for (int b = 1; a + b <= 8; ++b) {
      const int n = 8;
      const auto lhs = w_ab(a, b, n);
      const auto head = r_ij(a, a + b - 1, n);
      const auto tail = w_ab(a - 1, b, n);
      EXPECT_EQ(lhs, head * tail) << "a=" << a << " b=" << b;
      EXPECT_EQ(lhs.length(), head.length() + tail.length());
    }
  }
}

TEST(WAB, PowerOfLongCycle) {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; a + b <= 7; ++b) {
      const auto cyc = r_ij(a + b - 1, 1, 7);
      Perm p = Perm::identity(7);
      for (int i = 0; i < b; ++i) p = p * cyc;
      EXPECT_EQ(p, w_ab(a, b, 7));
    }
  }
}

TEST(WLambda, Examples) {
  EXPECT_TRUE(w_lambda(Partition({4})).is_identity());
  EXPECT_EQ(w_lambda(Partition({2, 1})), r(2, 3));
  const int n = 6, k = 2;
  const auto w = w_lambda(Partition::hook(n, k));
  for (int i = 2; i <= n - k; ++i) EXPECT_EQ(w(i), k + i);
}

TEST(WLambda, HookFactorizationWithLengthsAdding) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto whook = w_lambda(Partition::hook(n, k));
      const auto t1k = r_ij(1, k, n);
      EXPECT_EQ(w_ab(n - k, k, n), whook * t1k);
      EXPECT_EQ(w_ab(n - k, k, n).length(), whook.length() + t1k.length());
    }
  }
}

}  // namespace
