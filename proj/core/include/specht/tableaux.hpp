#pragma once

// Partitions, tableaux and the (k|n-k) pair tableaux used for hook shapes.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specht/coxeter.hpp"

namespace specht::tableaux {

using coxeter::Perm;

class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; throws std::invalid_argument if not weakly decreasing.
  explicit Partition(std::vector<int> parts);
  // "3,3,2" (spaces tolerated).
  static Partition parse(std::string_view text);
  static Partition hook(int n, int k);  // (n-k, 1^k)

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  Partition conjugate() const;
  bool is_hook() const;
  // k for a hook (n-k, 1^k).
  int hook_leg() const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// All partitions of n, largest first in lexicographic order.
std::vector<Partition> partitions_of(int n);

// hook_lengths(l)[i][j] for the node in row i+1, column j+1.
std::vector<std::vector<int>> hook_lengths(const Partition& lambda);

// sum (i-1) lambda_i.
int alpha(const Partition& lambda);

class Tableau {
 public:
  Tableau() = default;
  // Row-wise filling; throws unless the row lengths are the parts of a partition
  // and the entries are exactly 1..n.
  explicit Tableau(std::vector<std::vector<int>> rows);

  // t^lambda: 1..n filled along rows.
  static Tableau initial(const Partition& lambda);
  // t_lambda: 1..n filled down columns.
  static Tableau terminal(const Partition& lambda);
  // t^lambda d.
  static Tableau from_perm(const Partition& lambda, const Perm& d);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int n() const { return shape_.n(); }
  // 1-based row of an entry.
  int row_of(int entry) const;
  std::vector<int> first_column() const;

  bool is_row_standard() const;
  bool is_standard() const;
  Tableau transpose() const;
  // t w: every entry e replaced by e^w.
  Tableau act(const Perm& w) const;

  std::string to_string() const;

  friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }
  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

// The permutation with t = t^lambda d(t); its one-line form is the row reading word of t.
Perm d_of_tableau(const Tableau& t);

// Std(lambda). Hooks: tableaux with n in the first row first, then by the sorted
// first column, lexicographically. Other shapes: lexicographic in the reduced
// word of d(t).
std::vector<Tableau> standard_tableaux(const Partition& lambda);
std::size_t count_standard_tableaux(const Partition& lambda);

// (a|b): a has k entries and b the other n-k; standard when both are increasing.
struct PairTableau {
  std::vector<int> a;
  std::vector<int> b;

  int k() const { return static_cast<int>(a.size()); }
  int n() const { return static_cast<int>(a.size() + b.size()); }
  bool is_standard() const;
  std::string to_string() const;  // "(2|13)"

  friend auto operator<=>(const PairTableau&, const PairTableau&) = default;
  friend bool operator==(const PairTableau&, const PairTableau&) = default;
};

// Pair tableau from a k-subset; b is the increasing complement in 1..n.
PairTableau pair_from_subset(std::vector<int> a, int n);
// d with (a|b) = t^{(k|n-k)} d, where t^{(k|n-k)} = (1..k | k+1..n).
Perm d_of_pair(const PairTableau& ab);
// #{(i, j) : i in a, j in b, i > j}; equals len(d(a|b)) for standard pairs.
int pair_length(const PairTableau& ab);

struct PairInfo {
  PairTableau tableau;
  Perm d;
  int length;
};

// All binom(n, k) standard pair tableaux, lexicographic in a.
std::vector<PairInfo> pair_standard_tableaux(int k, int n);

struct Precedence {
  int index;       // I_t(a|b): the row of t whose first-column entry is missing from a
  bool before_n;   // additionally n lies in b
};

// (a|b) precedes t when every entry of a lies in t's first column. t must have hook
// shape (n-k, 1^k) with the same k, but need not be standard.
std::optional<Precedence> precedes_and_index(const PairTableau& ab, const Tableau& t);

// The pair tableau ({n-k+1..n} | {1..n-k}).
PairTableau a_plus(const Partition& lambda);
// t(1,n).
Tableau t_star(const Tableau& t);
// The unique standard pair preceding t(1,n) with n in b.
PairTableau star_pair(const Tableau& t);

}  // namespace specht::tableaux
