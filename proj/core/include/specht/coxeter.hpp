#pragma once

// The symmetric group S_n as a Coxeter group with generators r_i = (i, i+1).
//
// Permutations act on the right of points: i^(uv) = (i^u)^v, so a product u * v
// applies u first. This matches the right action on tableaux, t = t^lambda d(t).
// For example w_{2,1} = r_2 r_1 has one-line form (2,3,1).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace specht::tableaux {
class Partition;
}

namespace specht::coxeter {

using Word = std::vector<int>;
using Composition = std::vector<int>;

class Perm {
 public:
  Perm() = default;

  static Perm identity(int n);
  // 1-based one-line notation; throws std::invalid_argument unless a bijection.
  static Perm from_one_line(std::vector<int> images);
  static Perm simple_reflection(int i, int n);
  static Perm from_word(const Word& word, int n);

  int degree() const { return static_cast<int>(images_.size()); }
  // i^w, 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return images_; }
  bool is_identity() const;

  Perm inverse() const;
  // (u * v)(i) = v(u(i)).
  friend Perm operator*(const Perm& u, const Perm& v);

  // Number of inversions.
  int length() const;
  // len(w r_i) < len(w): value i+1 sits left of value i.
  bool has_right_descent(int i) const;
  // len(r_i w) < len(w): w(i) > w(i+1).
  bool has_left_descent(int i) const;
  Perm times_simple(int i) const;  // w r_i: swaps the values i, i+1
  Perm simple_times(int i) const;  // r_i w: swaps the positions i, i+1

  std::string to_string() const;
  std::uint64_t code() const;  // packed key, degree <= 16

  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  explicit Perm(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

inline std::ostream& operator<<(std::ostream& os, const Perm& w) { return os << w.to_string(); }

struct PermHash {
  std::size_t operator()(const Perm& w) const noexcept { return static_cast<std::size_t>(w.code()); }
};

struct LengthAndWord {
  int length;
  Word word;
};

// Inversion count plus the reduced word found by peeling off the smallest right
// descent repeatedly.
LengthAndWord length_and_reduced_word(const Perm& w);
inline Word reduced_word(const Perm& w) { return length_and_reduced_word(w).word; }

std::vector<Perm> all_permutations(int n);
int composition_size(const Composition& mu);
// Elements of the Young subgroup S_mu (blocks of consecutive points).
std::vector<Perm> young_subgroup(const Composition& mu);
bool in_young_subgroup(const Perm& w, const Composition& mu);
Perm longest_element(const Composition& mu);

// Minimal length right coset representatives of S_mu, i.e. one-line forms that
// increase inside every block, listed lexicographically by one-line form (the
// row reading word of the matching row standard mu-tableau).
std::vector<Perm> distinguished_reps(const Composition& mu);
bool is_distinguished(const Perm& d, const Composition& mu);

// r_{i,j}: r_i r_{i+1} ... r_j when i <= j, r_i r_{i-1} ... r_j when i > j, 1 if i or j is 0.
Word r_ij_word(int i, int j);
Perm r_ij(int i, int j, int n);
// Block swap sending 1..a to b+1..a+b and a+1..a+b to 1..b.
Perm w_ab(int a, int b, int n);
// d(t_lambda).
Perm w_lambda(const tableaux::Partition& lambda);

}  // namespace specht::coxeter
